//! Finite presentations of graded algebras with a t-automorphism.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::word::Word;
use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::{format_scalar, parse_scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: u8,
    pub name: String,
    pub degree: u32,
}

/// A rewrite rule `lhs -> rhs`. Every word of `rhs` is smaller than `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: AlgebraElement,
}

/// Generators are stored in precedence order, so a generator's id is its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    rules: Vec<Rule>,
    t_images: Vec<AlgebraElement>,
    t_inverse_images: Vec<AlgebraElement>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermFile {
    pub word: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleFile {
    pub lhs: String,
    pub rhs: Vec<TermFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: Vec<GeneratorFile>,
    pub order: Vec<String>,
    pub rules: Vec<RuleFile>,
    pub t_action: BTreeMap<String, Vec<TermFile>>,
    pub t_inverse: BTreeMap<String, Vec<TermFile>>,
}

const JORDAN_JSON: &str = include_str!("../../data/jordan.json");
const SUPER_JORDAN_JSON: &str = include_str!("../../data/super_jordan.json");

impl Presentation {
    pub fn new(
        generators: Vec<(String, u32)>,
        rules: Vec<Rule>,
        t_images: Vec<AlgebraElement>,
        t_inverse_images: Vec<AlgebraElement>,
    ) -> Result<Presentation> {
        if generators.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if generators.len() > u8::MAX as usize {
            return Err(Error::InvalidPresentation("too many generators".into()));
        }
        let mut seen = HashSet::new();
        for (name, degree) in &generators {
            if name.is_empty() || name.contains(['*', '^', ' ', '(', ')', '+', '-', '/']) {
                return Err(Error::InvalidPresentation(format!(
                    "invalid generator name `{name}`"
                )));
            }
            if name.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::InvalidPresentation(format!(
                    "generator name `{name}` is numeric"
                )));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator `{name}`"
                )));
            }
            if *degree == 0 {
                return Err(Error::InvalidPresentation(format!(
                    "generator `{name}` must have positive degree"
                )));
            }
        }
        let generators: Vec<Generator> = generators
            .into_iter()
            .enumerate()
            .map(|(i, (name, degree))| Generator {
                id: i as u8,
                name,
                degree,
            })
            .collect();
        let p = Presentation {
            generators,
            rules,
            t_images,
            t_inverse_images,
        };
        p.check_shape()?;
        Ok(p)
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.generators.len();
        if self.t_images.len() != n || self.t_inverse_images.len() != n {
            return Err(Error::InvalidPresentation(
                "t images must be given for every generator".into(),
            ));
        }
        let check_word = |w: &Word| -> Result<()> {
            if w.letters().iter().any(|&g| g as usize >= n) {
                return Err(Error::PresentationMismatch(format!(
                    "word {w:?} uses an unknown generator id"
                )));
            }
            Ok(())
        };
        for rule in &self.rules {
            check_word(&rule.lhs)?;
            if rule.lhs.len() < 1 {
                return Err(Error::InvalidPresentation("empty rule lhs".into()));
            }
            let d = self.word_degree(&rule.lhs);
            for (w, _) in rule.rhs.iter() {
                check_word(w)?;
                if self.word_degree(w) != d {
                    return Err(Error::InvalidPresentation(format!(
                        "rule {} is not homogeneous",
                        self.format_word_compact(&rule.lhs)
                    )));
                }
                if self.compare(w, &rule.lhs) != Ordering::Less {
                    return Err(Error::InvalidPresentation(format!(
                        "rule {}: right side word {} is not smaller than the left side",
                        self.format_word_compact(&rule.lhs),
                        self.format_word_compact(w)
                    )));
                }
            }
        }
        for (g, images) in [&self.t_images, &self.t_inverse_images].iter().enumerate() {
            for (i, img) in images.iter().enumerate() {
                let d = self.generators[i].degree;
                for (w, _) in img.iter() {
                    check_word(w)?;
                    if self.word_degree(w) != d {
                        let which = if g == 0 { "t" } else { "t^-1" };
                        return Err(Error::InvalidPresentation(format!(
                            "{which}-image of `{}` is not of degree {d}",
                            self.generators[i].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_file(file: &PresentationFile) -> Result<Presentation> {
        let mut degrees = BTreeMap::new();
        for g in &file.generators {
            if degrees.insert(g.name.clone(), g.degree).is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        if file.order.len() != degrees.len()
            || file.order.iter().any(|n| !degrees.contains_key(n))
        {
            return Err(Error::Schema(
                "`order` must list every generator exactly once".into(),
            ));
        }
        let gens: Vec<(String, u32)> = file
            .order
            .iter()
            .map(|n| (n.clone(), degrees[n]))
            .collect();
        // A shell presentation gives access to the word parser.
        let shell = Presentation {
            generators: gens
                .iter()
                .enumerate()
                .map(|(i, (n, d))| Generator {
                    id: i as u8,
                    name: n.clone(),
                    degree: *d,
                })
                .collect(),
            rules: Vec::new(),
            t_images: Vec::new(),
            t_inverse_images: Vec::new(),
        };
        let parse_terms = |terms: &[TermFile]| -> Result<AlgebraElement> {
            let mut e = LinComb::zero();
            for t in terms {
                e.add_term(shell.parse_word(&t.word)?, parse_scalar(&t.coeff)?);
            }
            Ok(e)
        };
        let mut rules = Vec::new();
        for r in &file.rules {
            rules.push(Rule {
                lhs: shell.parse_word(&r.lhs)?,
                rhs: parse_terms(&r.rhs)?,
            });
        }
        let mut t_images = Vec::new();
        let mut t_inverse_images = Vec::new();
        for (name, _) in &gens {
            let img = file.t_action.get(name).ok_or_else(|| {
                Error::Schema(format!("missing t_action for generator `{name}`"))
            })?;
            t_images.push(parse_terms(img)?);
            let inv = file.t_inverse.get(name).ok_or_else(|| {
                Error::Schema(format!("missing t_inverse for generator `{name}`"))
            })?;
            t_inverse_images.push(parse_terms(inv)?);
        }
        for key in file.t_action.keys().chain(file.t_inverse.keys()) {
            if !degrees.contains_key(key) {
                return Err(Error::UnknownGenerator(key.clone()));
            }
        }
        Presentation::new(gens, rules, t_images, t_inverse_images)
    }

    pub fn from_json(text: &str) -> Result<Presentation> {
        let file: PresentationFile = serde_json::from_str(text)?;
        Presentation::from_file(&file)
    }

    pub fn to_file(&self) -> PresentationFile {
        let terms = |e: &AlgebraElement| -> Vec<TermFile> {
            e.iter()
                .map(|(w, c)| TermFile {
                    word: self.format_word_compact(w),
                    coeff: format_scalar(c),
                })
                .collect()
        };
        PresentationFile {
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorFile {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect(),
            order: self.generators.iter().map(|g| g.name.clone()).collect(),
            rules: self
                .rules
                .iter()
                .map(|r| RuleFile {
                    lhs: self.format_word_compact(&r.lhs),
                    rhs: terms(&r.rhs),
                })
                .collect(),
            t_action: self
                .generators
                .iter()
                .map(|g| (g.name.clone(), terms(&self.t_images[g.id as usize])))
                .collect(),
            t_inverse: self
                .generators
                .iter()
                .map(|g| (g.name.clone(), terms(&self.t_inverse_images[g.id as usize])))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("presentation serializes")
    }

    /// The Jordan plane: `yx = xy - 1/2 x^2`, `t.x = x`, `t.y = x + y`.
    pub fn jordan() -> Presentation {
        Presentation::from_json(JORDAN_JSON).expect("built-in Jordan presentation")
    }

    /// The super Jordan plane: `x^2 = 0`, `y^2 x = x y^2 + x y x`, `t.x = -x`, `t.y = x - y`.
    pub fn super_jordan() -> Presentation {
        Presentation::from_json(SUPER_JORDAN_JSON).expect("built-in super Jordan presentation")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn t_image(&self, g: u8) -> &AlgebraElement {
        &self.t_images[g as usize]
    }

    pub fn t_inverse_image(&self, g: u8) -> &AlgebraElement {
        &self.t_inverse_images[g as usize]
    }

    pub fn with_rules(&self, rules: Vec<Rule>) -> Result<Presentation> {
        let p = Presentation {
            generators: self.generators.clone(),
            rules,
            t_images: self.t_images.clone(),
            t_inverse_images: self.t_inverse_images.clone(),
        };
        p.check_shape()?;
        Ok(p)
    }

    pub fn generator_by_name(&self, name: &str) -> Result<u8> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| g.id)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn word_degree(&self, w: &Word) -> u32 {
        w.letters()
            .iter()
            .map(|&g| self.generators[g as usize].degree)
            .sum()
    }

    pub fn max_rule_degree(&self) -> u32 {
        self.rules
            .iter()
            .map(|r| self.word_degree(&r.lhs))
            .max()
            .unwrap_or(0)
    }

    /// Degree, then length, then lexicographic by generator precedence.
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.word_degree(a)
            .cmp(&self.word_degree(b))
            .then(a.len().cmp(&b.len()))
            .then_with(|| a.letters().cmp(b.letters()))
    }

    fn single_char_names(&self) -> bool {
        self.generators.iter().all(|g| g.name.chars().count() == 1)
    }

    /// Parses a monomial such as `yx`, `y^2x`, `x*y*y` or `1` (the unit).
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "1" {
            return Ok(Word::unit());
        }
        let bytes = t.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'*' {
                i += 1;
                continue;
            }
            let rest = &t[i..];
            let best = self
                .generators
                .iter()
                .filter(|g| rest.starts_with(g.name.as_str()))
                .max_by_key(|g| g.name.len())
                .ok_or_else(|| Error::UnknownGenerator(rest.to_string()))?;
            i += best.name.len();
            let mut count = 1usize;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                count = t[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            }
            letters.extend(std::iter::repeat_n(best.id, count));
        }
        Ok(Word(letters))
    }

    /// Compact form used in files: `xy`, `yyx`; `*`-joined when names are longer than one character.
    pub fn format_word_compact(&self, w: &Word) -> String {
        let names: Vec<&str> = w
            .letters()
            .iter()
            .map(|&g| self.generators[g as usize].name.as_str())
            .collect();
        if self.single_char_names() {
            names.concat()
        } else {
            names.join("*")
        }
    }

    /// Display form with powers: `x*y^2`, `1` for the unit.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let name = &self.generators[letters[i] as usize].name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Terms in decreasing monomial order, e.g. `x*y - 1/2*x^2`.
    pub fn format_element(&self, e: &AlgebraElement) -> String {
        let mut terms: Vec<(&Word, &crate::scalar::Scalar)> = e.iter().collect();
        terms.sort_by(|a, b| self.compare(b.0, a.0));
        format_terms(terms.into_iter().map(|(w, c)| (self.format_word(w), c)))
    }
}

/// Joins `(monomial, coefficient)` pairs with signs, treating `"1"` as the unit monomial.
pub fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a crate::scalar::Scalar)>,
{
    use num_traits::{One, Signed};
    let mut out = String::new();
    for (i, (mono, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono == "1" {
            out.push_str(&format_scalar(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{}", format_scalar(&abs), mono));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
