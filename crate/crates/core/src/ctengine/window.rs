use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coeff::{CoeffError, QTSeries};
use crate::symfunc::NPoly;

/// Which exponent vectors a [`WindowSeries`] keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Window {
    /// Everything allowed by the `(q,t)`-order.
    Unbounded,
    /// `|e_i| <= caps[i]` in every variable.
    Box(Vec<i32>),
    /// `Σ |e_i| <= cap`.
    Degree(i32),
    /// Only the listed exponent vectors.
    Targets(BTreeSet<Vec<i32>>),
}

impl Window {
    pub fn admits(&self, e: &[i32]) -> bool {
        match self {
            Window::Unbounded => true,
            Window::Box(caps) => e.iter().zip(caps).all(|(x, c)| x.abs() <= *c),
            Window::Degree(cap) => e.iter().map(|x| x.abs()).sum::<i32>() <= *cap,
            Window::Targets(set) => set.contains(e),
        }
    }

    /// L1 distance from `e` to the nearest admitted exponent (0 when admitted).
    pub fn distance(&self, e: &[i32]) -> i64 {
        match self {
            Window::Unbounded => 0,
            Window::Box(caps) => e.iter().zip(caps).map(|(x, c)| (x.abs() - c).max(0) as i64).sum(),
            Window::Degree(cap) => (e.iter().map(|x| x.abs() as i64).sum::<i64>() - *cap as i64).max(0),
            Window::Targets(set) => set
                .iter()
                .map(|t| t.iter().zip(e).map(|(a, b)| (a - b).abs() as i64).sum::<i64>())
                .min()
                .unwrap_or(i64::MAX),
        }
    }
}

/// Variable names `prefix1 .. prefixn`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Laurent series in named variables whose coefficients are truncated `(q,t)`-series.
#[derive(Clone, PartialEq)]
pub struct WindowSeries {
    vars: Vec<String>,
    order: u32,
    terms: BTreeMap<Vec<i32>, QTSeries>,
    truncated: bool,
}

impl WindowSeries {
    pub fn zero(vars: Vec<String>, order: u32) -> Self {
        WindowSeries {
            vars,
            order,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn one(vars: Vec<String>, order: u32) -> Self {
        let n = vars.len();
        let mut s = Self::zero(vars, order);
        s.add_term(vec![0; n], QTSeries::one(order));
        s
    }

    pub fn from_terms(vars: Vec<String>, order: u32, terms: impl IntoIterator<Item = (Vec<i32>, QTSeries)>) -> Self {
        let mut s = Self::zero(vars, order);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Series expansion of a polynomial's coefficients.
    pub fn from_npoly(p: &NPoly, vars: Vec<String>, order: u32) -> Result<Self, CoeffError> {
        assert_eq!(p.n(), vars.len());
        let mut s = Self::zero(vars, order);
        for (e, c) in p.terms() {
            s.add_term(e.iter().map(|&x| x as i32).collect(), QTSeries::from_ratqt(c, order)?);
        }
        Ok(s)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, QTSeries> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether any term was discarded by a window.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub(crate) fn mark_truncated(&mut self) {
        self.truncated = true;
    }

    pub fn coeff(&self, e: &[i32]) -> QTSeries {
        self.terms.get(e).cloned().unwrap_or_else(|| QTSeries::zero(self.order))
    }

    pub fn add_term(&mut self, e: Vec<i32>, c: QTSeries) {
        assert_eq!(e.len(), self.vars.len(), "exponent length mismatch");
        let c = if c.order() > self.order {
            c.truncate(self.order)
        } else {
            c
        };
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(e, c);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.truncated |= other.truncated;
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Product over the same variables, keeping only terms admitted by `window`.
    pub fn mul(&self, other: &Self, window: &Window) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars.clone(), self.order.min(other.order));
        out.truncated = self.truncated || other.truncated;
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if !window.admits(&e) {
                    out.truncated = true;
                    continue;
                }
                out.add_term(e, a * b);
            }
        }
        out
    }

    /// Product of series in disjoint variable sets; variables of `other` are appended.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut vars = self.vars.clone();
        vars.extend(other.vars.iter().cloned());
        let mut out = Self::zero(vars, self.order.min(other.order));
        out.truncated = self.truncated || other.truncated;
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let mut e = ea.clone();
                e.extend_from_slice(eb);
                out.add_term(e, a * b);
            }
        }
        out
    }

    /// Rename/reorder to `vars`, which must contain every current variable;
    /// new variables enter with exponent 0.
    pub fn embed(&self, vars: &[String]) -> Self {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("variable missing from target list")
            })
            .collect();
        let mut out = Self::zero(vars.to_vec(), self.order);
        out.truncated = self.truncated;
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (k, &p) in pos.iter().enumerate() {
                f[p] = e[k];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitute `v -> 1/v` for the named variables.
    pub fn invert_vars(&self, names: &[&str]) -> Self {
        let idx: Vec<usize> = names.iter().map(|n| self.index_of(n)).collect();
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                for &i in &idx {
                    f[i] = -f[i];
                }
                (f, c.clone())
            })
            .collect();
        out
    }

    fn index_of(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    /// Constant term in the named variables; those variables are removed.
    pub fn ct(&self, names: &[&str]) -> Self {
        let idx: Vec<usize> = names.iter().map(|n| self.index_of(n)).collect();
        let keep: Vec<usize> = (0..self.vars.len()).filter(|i| !idx.contains(i)).collect();
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut out = Self::zero(vars, self.order);
        out.truncated = self.truncated;
        for (e, c) in &self.terms {
            if idx.iter().all(|&i| e[i] == 0) {
                out.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
            }
        }
        out
    }

    /// Coefficient of the empty monomial once every variable is integrated out.
    pub fn scalar(&self) -> QTSeries {
        assert!(self.vars.is_empty(), "series still depends on variables");
        self.coeff(&[])
    }
}

impl fmt::Display for WindowSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, x) in self.vars.iter().zip(e) {
                match x {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{x}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WindowSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WindowSeries[{}]({self})", self.vars.join(","))
    }
}
