//! Algebra presentations: generators, formal parameters and an OPE table.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use va_exact::{factorial, Scalar, Q};

use crate::error::{Result, VaError};
use crate::field::{Field, Letter, letter_deriv, letter_gen};

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub name: String,
    pub odd: bool,
    pub weight: Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// All pole coefficients are multiples of the identity or of single generators.
    FreeField,
    StructureConstant,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::FreeField => "free-field",
            Kind::StructureConstant => "structure-constant",
        }
    }
}

/// Given OPE entries `a(z)b(w) ~ Σ_n poles[n] (z-w)^{-n}`.
pub type OpeEntries = BTreeMap<(usize, usize), BTreeMap<u32, Field>>;

#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    params: Vec<String>,
    gens: Vec<GenSpec>,
    names: Vec<String>,
    w2: Vec<i64>,
    kind: Kind,
    entries: OpeEntries,
    /// `products[a * n + b][j]` is the field `a_(j) b`.
    products: Vec<Vec<Field>>,
}

impl Algebra {
    pub fn new(name: &str, params: Vec<String>, gens: Vec<GenSpec>, kind: Kind, entries: OpeEntries) -> Result<Algebra> {
        let mut names: Vec<String> = Vec::new();
        let mut w2 = Vec::new();
        for g in &gens {
            if names.contains(&g.name) {
                return Err(VaError::Invalid(format!("generator `{}` declared twice", g.name)));
            }
            if params.contains(&g.name) {
                return Err(VaError::Invalid(format!("`{}` is both a parameter and a generator", g.name)));
            }
            let twice = &g.weight * Q::from_integer(2.into());
            if !twice.is_integer() || twice < Q::zero() {
                return Err(VaError::Invalid(format!("weight of `{}` must be a nonnegative multiple of 1/2", g.name)));
            }
            w2.push(i64::try_from(twice.to_integer()).map_err(|_| VaError::Invalid("weight too large".into()))?);
            names.push(g.name.clone());
        }
        let mut alg = Algebra { name: name.to_string(), params, gens, names, w2, kind, entries, products: Vec::new() };
        alg.validate()?;
        alg.products = alg.build_products();
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.gens.len();
        for (&(a, b), poles) in &self.entries {
            if a >= n || b >= n {
                return Err(VaError::Invalid("OPE entry references an undeclared generator".into()));
            }
            for (&p, f) in poles {
                if p == 0 {
                    return Err(VaError::Invalid("pole orders start at 1".into()));
                }
                let mut gs = Vec::new();
                f.generators(&mut gs);
                if gs.iter().any(|g| *g >= n) {
                    return Err(VaError::Invalid("OPE entry references an undeclared generator".into()));
                }
                let mut ps = Vec::new();
                f.params(&mut ps);
                if let Some(p) = ps.iter().find(|p| !self.params.contains(p)) {
                    return Err(VaError::UnknownParameter(p.clone()));
                }
                if f.is_zero() {
                    continue;
                }
                let expect = self.w2[a] + self.w2[b] - 2 * p as i64;
                match self.field_w2(f) {
                    Some(w) if w == expect => {}
                    _ => {
                        return Err(VaError::Invalid(format!(
                            "pole {p} of {} {} is not homogeneous of weight {}",
                            self.names[a],
                            self.names[b],
                            va_exact::fmt_rational(&va_exact::q(expect, 2))
                        )))
                    }
                }
                if self.kind == Kind::FreeField && f.degree() > 1 {
                    return Err(VaError::Invalid(format!(
                        "free-field presentation has a nonlinear pole in {} {}",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fill in every ordered pair; reversed pairs come from skew-symmetry
    /// `b_(n)a = (-1)^{|a||b|} Σ_i (-1)^{n+i+1} ∂^(i)(a_(n+i)b) / i!`.
    fn build_products(&self) -> Vec<Vec<Field>> {
        let n = self.gens.len();
        let mut products = vec![Vec::new(); n * n];
        let as_modes = |poles: &BTreeMap<u32, Field>| -> Vec<Field> {
            let top = poles.keys().max().copied().unwrap_or(0) as usize;
            let mut v = vec![Field::zero(); top];
            for (&p, f) in poles {
                v[p as usize - 1] = f.clone();
            }
            v
        };
        for (&(a, b), poles) in &self.entries {
            products[a * n + b] = as_modes(poles);
        }
        for &(a, b) in self.entries.keys() {
            if self.entries.contains_key(&(b, a)) {
                continue;
            }
            let fwd = &products[a * n + b];
            let sign = if self.gens[a].odd && self.gens[b].odd { -1 } else { 1 };
            let mut rev = Vec::with_capacity(fwd.len());
            for m in 0..fwd.len() {
                let mut terms = Vec::new();
                for i in 0..(fwd.len() - m) {
                    let src = &fwd[m + i];
                    if src.is_zero() {
                        continue;
                    }
                    let s = if (m + i + 1) % 2 == 0 { sign } else { -sign };
                    let c = Scalar::from(Q::from_integer(s.into()) / factorial(i as u32));
                    terms.push((c, Field::deriv(i as u32, src.clone())));
                }
                rev.push(Field::Sum(terms));
            }
            products[b * n + a] = rev;
        }
        products
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn gens(&self) -> &[GenSpec] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn entries(&self) -> &OpeEntries {
        &self.entries
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| VaError::UnknownGenerator(name.to_string()))
    }

    pub fn is_odd(&self, g: usize) -> bool {
        self.gens[g].odd
    }

    /// Twice the conformal weight of a generator.
    pub fn gen_w2(&self, g: usize) -> i64 {
        self.w2[g]
    }

    /// `a_(j) b` for all `j` below the maximal pole.
    pub fn products(&self, a: usize, b: usize) -> &[Field] {
        &self.products[a * self.gens.len() + b]
    }

    pub fn letter_w2(&self, l: Letter) -> i64 {
        self.w2[letter_gen(l)] + 2 * letter_deriv(l) as i64
    }

    pub fn word_w2(&self, w: &[Letter]) -> i64 {
        w.iter().map(|l| self.letter_w2(*l)).sum()
    }

    pub fn word_odd(&self, w: &[Letter]) -> bool {
        w.iter().filter(|l| self.gens[letter_gen(**l)].odd).count() % 2 == 1
    }

    /// Twice the weight of a field, if it is homogeneous and nonzero.
    pub fn field_w2(&self, f: &Field) -> Option<i64> {
        match f {
            Field::Identity => Some(0),
            Field::Gen(g) => Some(self.w2[*g]),
            Field::Deriv(k, x) => self.field_w2(x).map(|w| w + 2 * *k as i64),
            Field::Wick(a, b) => Some(self.field_w2(a)? + self.field_w2(b)?),
            Field::Sum(t) => {
                let mut w = None;
                for (c, x) in t {
                    if c.is_zero() || x.is_zero() {
                        continue;
                    }
                    let wx = self.field_w2(x)?;
                    match w {
                        None => w = Some(wx),
                        Some(v) if v != wx => return None,
                        _ => {}
                    }
                }
                w
            }
        }
    }

    /// Upper bound for twice the weight of any term.
    pub fn field_max_w2(&self, f: &Field) -> i64 {
        match f {
            Field::Identity => 0,
            Field::Gen(g) => self.w2[*g],
            Field::Deriv(k, x) => self.field_max_w2(x) + 2 * *k as i64,
            Field::Wick(a, b) => self.field_max_w2(a) + self.field_max_w2(b),
            Field::Sum(t) => t.iter().map(|(_, x)| self.field_max_w2(x)).max().unwrap_or(0),
        }
    }

    /// Parity of a field, if homogeneous and nonzero.
    pub fn field_odd(&self, f: &Field) -> Option<bool> {
        match f {
            Field::Identity => Some(false),
            Field::Gen(g) => Some(self.gens[*g].odd),
            Field::Deriv(_, x) => self.field_odd(x),
            Field::Wick(a, b) => Some(self.field_odd(a)? ^ self.field_odd(b)?),
            Field::Sum(t) => {
                let mut p = None;
                for (c, x) in t {
                    if c.is_zero() || x.is_zero() {
                        continue;
                    }
                    let px = self.field_odd(x)?;
                    match p {
                        None => p = Some(px),
                        Some(v) if v != px => return None,
                        _ => {}
                    }
                }
                p
            }
        }
    }

    /// Replace formal parameters by rational values; the rest stay formal.
    pub fn specialize(&self, values: &[(&str, Q)]) -> Result<Algebra> {
        for (p, _) in values {
            if !self.params.iter().any(|x| x == p) {
                return Err(VaError::UnknownParameter(p.to_string()));
            }
        }
        let vals: Vec<(String, Q)> = values.iter().map(|(p, v)| (p.to_string(), v.clone())).collect();
        let sub = |c: &Scalar| c.subs_all(&vals);
        let mut entries = OpeEntries::new();
        for (k, poles) in &self.entries {
            let mut np = BTreeMap::new();
            for (p, f) in poles {
                np.insert(*p, f.map_scalars(&sub)?);
            }
            entries.insert(*k, np);
        }
        let params = self.params.iter().filter(|p| !values.iter().any(|(x, _)| x == p)).cloned().collect();
        Algebra::new(&self.name, params, self.gens.clone(), self.kind, entries)
    }

    /// Copy with one pole coefficient replaced (used for perturbation controls).
    pub fn with_entry(&self, a: usize, b: usize, pole: u32, f: Field) -> Result<Algebra> {
        let mut entries = self.entries.clone();
        entries.entry((a, b)).or_default().insert(pole, f);
        Algebra::new(&self.name, self.params.clone(), self.gens.clone(), self.kind, entries)
    }

    /// Tensor product; generator names get the given suffixes.
    pub fn tensor(&self, other: &Algebra, suffixes: (&str, &str)) -> Result<Algebra> {
        let n = self.gens.len();
        let mut gens: Vec<GenSpec> = self
            .gens
            .iter()
            .map(|g| GenSpec { name: format!("{}{}", g.name, suffixes.0), ..g.clone() })
            .collect();
        gens.extend(other.gens.iter().map(|g| GenSpec { name: format!("{}{}", g.name, suffixes.1), ..g.clone() }));
        let mut params = self.params.clone();
        for p in &other.params {
            if !params.contains(p) {
                params.push(p.clone());
            }
        }
        let mut entries = self.entries.clone();
        for ((a, b), poles) in &other.entries {
            let shifted = poles.iter().map(|(p, f)| (*p, shift_gens(f, n))).collect();
            entries.insert((a + n, b + n), shifted);
        }
        let kind = if self.kind == Kind::FreeField && other.kind == Kind::FreeField {
            Kind::FreeField
        } else {
            Kind::StructureConstant
        };
        Algebra::new(&format!("{}*{}", self.name, other.name), params, gens, kind, entries)
    }

    /// Whether every table coefficient is rational (no formal parameters left).
    pub fn is_rational(&self) -> bool {
        self.params.is_empty()
            || self.entries.values().flat_map(|p| p.values()).all(|f| {
                let mut ps = Vec::new();
                f.params(&mut ps);
                ps.is_empty()
            })
    }
}

fn shift_gens(f: &Field, n: usize) -> Field {
    match f {
        Field::Identity => Field::Identity,
        Field::Gen(g) => Field::Gen(g + n),
        Field::Deriv(k, x) => Field::Deriv(*k, Box::new(shift_gens(x, n))),
        Field::Wick(a, b) => Field::wick(shift_gens(a, n), shift_gens(b, n)),
        Field::Sum(t) => Field::Sum(t.iter().map(|(c, x)| (c.clone(), shift_gens(x, n))).collect()),
    }
}

/// Identity-multiple helper used by presets.
pub fn scalar_field(c: Scalar) -> Field {
    if c.is_one() {
        Field::Identity
    } else {
        Field::scaled(c, Field::Identity)
    }
}
