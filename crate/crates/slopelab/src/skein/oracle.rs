//! Colored Jones polynomials of standard diagrams by cabling and Temperley-Lieb contraction.
//!
//! An `n`-cabled 2-tangle is an element of `TL_{2n}` on `4n` points: the top row holds
//! the NW bundle then the NE bundle, the bottom row the SW bundle then the SE bundle.

use super::jw::jw_projector;
use super::qfrac::QFrac;
use super::tl::{GluePlan, Matching, Side, TLElement};
use crate::exact::LaurentPoly;
use crate::knot::diagram::{montesinos_row, pretzel_row, Diagram, DiagramError, POSITIVE_TWIST_OVER_BACKSLASH};
use crate::knot::model::{KnotError, KnotSpec, MontesinosKnot, PretzelKnot};
use crate::knot::tangle::{Tangle, TangleAlgebra, TangleRow};

/// Where projectors are inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    /// One projector on the closing arc; everything else is plain `TL_{2n}`.
    PerComponent,
    /// A projector on every bundle. Elements then live in the span of matchings
    /// without turnbacks inside a corner, which has only `n + 1` elements.
    EveryBundle,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("color {color} exceeds the configured cap {cap}")]
    ColorTooLarge { color: usize, cap: usize },
    #[error("crossings x color = {work} exceeds the budget {budget}")]
    BudgetExceeded { work: usize, budget: usize },
    #[error("intermediate element has {terms} terms, above the limit {limit}")]
    TooManyTerms { terms: usize, limit: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error("bracket is not a Laurent polynomial")]
    NotPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest color `n + 1` accepted.
    pub max_color: usize,
    /// Largest `crossings * color` accepted.
    pub budget: usize,
    pub max_terms: usize,
    pub projection: Projection,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { max_color: 4, budget: 400, max_terms: 20_000, projection: Projection::EveryBundle }
    }
}

/// Evaluator of `n`-cabled tangles.
pub struct Oracle {
    n: usize,
    projection: Projection,
    max_terms: usize,
    sum_plan: GluePlan,
    product_plan: GluePlan,
    close_plan: GluePlan,
    closer: TLElement,
    sum_junction: TLElement,
    product_junction: TLElement,
    cap_junction: TLElement,
    crossings: [Option<TLElement>; 2],
    error: Option<OracleError>,
}

fn zero_matching(n: usize) -> Matching {
    let mut p = vec![0u8; 4 * n];
    for j in 0..2 * n {
        p[j] = (2 * n - 1 - j) as u8;
        p[2 * n + j] = (4 * n - 1 - j) as u8;
    }
    Matching(p)
}

impl Oracle {
    pub fn new(n: usize, projection: Projection) -> Self {
        assert!(n >= 1, "at least one cable strand");
        let w = 2 * n;
        let sum_links: Vec<(usize, usize)> = (0..n)
            .flat_map(|j| [(n + j, n - 1 - j), (w + n + j, w + n - 1 - j)])
            .collect();
        let sum_order = (0..n)
            .map(|i| (Side::A, i))
            .chain((n..w).map(|i| (Side::B, i)))
            .chain((w..w + n).map(|i| (Side::A, i)))
            .chain((w + n..2 * w).map(|i| (Side::B, i)))
            .collect();
        let product_links: Vec<(usize, usize)> = (0..w).map(|i| (w + i, i)).collect();
        let product_order = (0..w).map(|i| (Side::A, i)).chain((w..2 * w).map(|i| (Side::B, i))).collect();
        let close_links: Vec<(usize, usize)> = (0..2 * w).map(|i| (i, i)).collect();
        let zero = zero_matching(n);
        let closer = TLElement::from_matching(w, w, zero.clone(), QFrac::one());

        let f = jw_projector(n);
        let id = TLElement::identity(n);
        let z = TLElement::from_matching(w, w, zero, QFrac::one());
        let f_left = f.tensor(&id);
        let sum_junction = f_left.multiply(&z).unwrap().multiply(&f_left).unwrap();
        let product_junction = f.tensor(&f);
        let cap_junction = f_left.multiply(&z).unwrap();

        Self {
            n,
            projection,
            max_terms: usize::MAX,
            sum_plan: GluePlan::new(2 * w, 2 * w, &sum_links, sum_order),
            product_plan: GluePlan::new(2 * w, 2 * w, &product_links, product_order),
            close_plan: GluePlan::new(2 * w, 2 * w, &close_links, Vec::new()),
            closer,
            sum_junction,
            product_junction,
            cap_junction,
            crossings: [None, None],
            error: None,
        }
    }

    pub fn with_max_terms(mut self, limit: usize) -> Self {
        self.max_terms = limit;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn settle(&mut self, mut x: TLElement) -> TLElement {
        if self.projection == Projection::EveryBundle {
            let n = self.n;
            x.retain(|m| (0..m.len()).all(|i| i / n != m.partner(i) / n));
        }
        if x.len() > self.max_terms && self.error.is_none() {
            self.error = Some(OracleError::TooManyTerms { terms: x.len(), limit: self.max_terms });
        }
        x
    }

    fn failed(&self) -> bool {
        self.error.is_some()
    }

    /// The cabled crossing: the NE bundle passes to SW through `n^2` elementary crossings.
    fn build_crossing(&self, sign: i8) -> TLElement {
        let (n, w) = (self.n, 2 * self.n);
        let slash_over = POSITIVE_TWIST_OVER_BACKSLASH != (sign > 0);
        let a = QFrac::poly(LaurentPoly::v(-1));
        let b = QFrac::poly(LaurentPoly::v(1));
        let (c_id, c_e) = if slash_over { (a, b) } else { (b, a) };
        let mut x = TLElement::identity(w);
        for j in 0..n {
            for p in (j..n + j).rev() {
                let sigma = TLElement::identity(w).scale(&c_id).add(&TLElement::generator(w, p + 1).scale(&c_e));
                x = x.multiply(&sigma).unwrap();
            }
        }
        x
    }

    /// `⟨D^n⟩` for the numerator closure of `t`, with the configured projectors.
    pub fn bracket(&mut self, t: &Tangle) -> Result<LaurentPoly, OracleError> {
        self.error = None;
        let x = t.eval(self);
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        let x = match self.projection {
            Projection::EveryBundle => x.glue(&self.sum_junction, &self.sum_plan, 2 * self.n, 2 * self.n),
            Projection::PerComponent => x.glue(&self.cap_junction, &self.sum_plan, 2 * self.n, 2 * self.n),
        };
        let r = x.glue(&self.closer, &self.close_plan, 0, 0).coeff(&Matching(Vec::new()));
        r.to_laurent().ok_or(OracleError::NotPolynomial)
    }
}

impl TangleAlgebra for Oracle {
    type Element = TLElement;

    fn zero(&mut self) -> TLElement {
        TLElement::from_matching(2 * self.n, 2 * self.n, zero_matching(self.n), QFrac::one())
    }

    fn infinity(&mut self) -> TLElement {
        TLElement::identity(2 * self.n)
    }

    fn crossing(&mut self, sign: i8) -> TLElement {
        let slot = usize::from(sign > 0);
        if self.crossings[slot].is_none() {
            let x = self.build_crossing(sign);
            let x = self.settle(x);
            self.crossings[slot] = Some(x);
        }
        self.crossings[slot].clone().unwrap()
    }

    fn sum(&mut self, a: TLElement, b: TLElement) -> TLElement {
        if self.failed() {
            return a;
        }
        let w = 2 * self.n;
        let r = match self.projection {
            Projection::EveryBundle => {
                let left = a.glue(&self.sum_junction, &self.sum_plan, w, w);
                left.glue(&b, &self.sum_plan, w, w)
            }
            Projection::PerComponent => a.glue(&b, &self.sum_plan, w, w),
        };
        self.settle(r)
    }

    fn product(&mut self, a: TLElement, b: TLElement) -> TLElement {
        if self.failed() {
            return a;
        }
        let w = 2 * self.n;
        let r = match self.projection {
            Projection::EveryBundle => {
                let top = a.glue(&self.product_junction, &self.product_plan, w, w);
                top.glue(&b, &self.product_plan, w, w)
            }
            Projection::PerComponent => a.glue(&b, &self.product_plan, w, w),
        };
        self.settle(r)
    }
}

/// `J_{K,n+1} = ((-1)^n v)^{ω (n^2 + 2n)} (-1)^n ⟨D^n⟩` for the numerator closure of `t`.
pub fn colored_jones_of_tangle(t: &Tangle, n: usize, cfg: &OracleConfig) -> Result<LaurentPoly, OracleError> {
    let color = n + 1;
    if color > cfg.max_color {
        return Err(OracleError::ColorTooLarge { color, cap: cfg.max_color });
    }
    let work = t.crossings() * color;
    if work > cfg.budget {
        return Err(OracleError::BudgetExceeded { work, budget: cfg.budget });
    }
    let writhe = Diagram::numerator_closure(t).writhe()?;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut oracle = Oracle::new(n, cfg.projection).with_max_terms(cfg.max_terms);
    let bracket = oracle.bracket(t)?;
    let e = writhe * (n * n + 2 * n) as i64;
    let mut sign = if n % 2 == 1 { -1 } else { 1 };
    if n % 2 == 1 && e.rem_euclid(2) == 1 {
        sign = -sign;
    }
    Ok(bracket.shift(e).scale(&sign.into()))
}

pub fn colored_jones_of_row(row: &TangleRow, n: usize, cfg: &OracleConfig) -> Result<LaurentPoly, OracleError> {
    colored_jones_of_tangle(&row.left_fold(), n, cfg)
}

/// The standard row of a knot specification (pretzel or reduced Montesinos).
pub fn standard_row(spec: &KnotSpec) -> Result<TangleRow, KnotError> {
    Ok(match spec {
        KnotSpec::Pretzel(q) => match PretzelKnot::new(q.clone()) {
            // twists of size one still give valid diagrams, e.g. the trefoil P(1,1,1)
            Err(KnotError::SmallPretzelEntry(_)) if q.len() >= 3 && !q.contains(&0) => {
                pretzel_row(&PretzelKnot::unchecked(q.clone()))
            }
            p => pretzel_row(&p?),
        },
        KnotSpec::Montesinos(r) => montesinos_row(&MontesinosKnot::new(r.clone())?),
    })
}

/// `J_{K,n+1}` of the standard diagram of `spec`.
pub fn colored_jones(spec: &KnotSpec, n: usize, cfg: &OracleConfig) -> Result<LaurentPoly, OracleError> {
    colored_jones_of_row(&standard_row(spec)?, n, cfg)
}
