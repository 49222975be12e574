//! One-row-per-instance comparison of every construction against its bound
//! and, for small instances, the exact optimum.

use std::fmt;

use crate::bounds;
use crate::error::{Error, Result};
use crate::exact::exact_gamma_x2;
use crate::graph::Graph;
use crate::peel::peel_double_domination;
use crate::rainbow::dispatch_all;
use crate::recognition::{is_striped, recognize_mop};

pub const CSV_HEADER: &str =
    "id,n,t,bound_2n3,bound_nt2,bound_nmt,size_peel,size_rainbow,size_degree,size_dispatch,exact,striped";

pub const DEFAULT_EXACT_CUTOFF: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub id: String,
    pub n: usize,
    pub t: usize,
    pub bound_2n3: usize,
    pub bound_nt2: usize,
    pub bound_nmt: usize,
    pub size_peel: usize,
    /// `None` for `n = 3`, where the degree-based constructions do not apply.
    pub size_rainbow: Option<usize>,
    pub size_degree: Option<usize>,
    pub size_dispatch: Option<usize>,
    /// `None` above the exact cutoff or when the node budget ran out.
    pub exact: Option<usize>,
    pub striped: bool,
}

impl ReportRow {
    /// Computes every column for a MOP.
    pub fn compute(id: impl Into<String>, g: &Graph, exact_cutoff: usize, budget: Option<u64>) -> Result<Self> {
        let emb = recognize_mop(g)?;
        let n = g.n();
        let t = g.degree_two_vertices().len();
        let size_peel = peel_double_domination(g)?.size();
        let (size_rainbow, size_degree, size_dispatch) = if n >= 4 {
            let (r, d, best) = dispatch_all(g)?;
            (Some(r.size()), Some(d.size()), Some(best.size()))
        } else {
            (None, None, None)
        };
        let exact = if n <= exact_cutoff {
            match exact_gamma_x2(g, budget) {
                Ok(rep) => Some(rep.optimum),
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        let row = ReportRow {
            id: id.into(),
            n,
            t,
            bound_2n3: bounds::two_thirds(n),
            bound_nt2: bounds::half_n_plus_t(n, t),
            bound_nmt: bounds::n_minus_t(n, t),
            size_peel,
            size_rainbow,
            size_degree,
            size_dispatch,
            exact,
            striped: is_striped(&emb, g)?,
        };
        row.check()?;
        Ok(row)
    }

    /// Size columns respect their bounds and the exact value, when present,
    /// is at most every size.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::InvariantViolation(format!("{}: {what}", self.id)));
        if self.size_peel > self.bound_2n3 {
            return fail(format!("peel {} > {}", self.size_peel, self.bound_2n3));
        }
        if let Some(r) = self.size_rainbow {
            if r > self.bound_nt2 {
                return fail(format!("rainbow {r} > {}", self.bound_nt2));
            }
        }
        if let Some(d) = self.size_degree {
            if d != self.bound_nmt {
                return fail(format!("degree {d} ≠ {}", self.bound_nmt));
            }
        }
        if let Some(s) = self.size_dispatch {
            let bound = self.bound_nt2.min(self.bound_nmt);
            if s > bound {
                return fail(format!("dispatch {s} > {bound}"));
            }
        }
        if let Some(x) = self.exact {
            let sizes = [Some(self.size_peel), self.size_rainbow, self.size_degree, self.size_dispatch];
            if let Some(s) = sizes.into_iter().flatten().find(|&s| s < x) {
                return fail(format!("exact {x} > heuristic size {s}"));
            }
        }
        Ok(())
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl fmt::Display for ReportRow {
    /// One CSV record matching [`CSV_HEADER`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.id,
            self.n,
            self.t,
            self.bound_2n3,
            self.bound_nt2,
            self.bound_nmt,
            self.size_peel,
            opt(self.size_rainbow),
            opt(self.size_degree),
            opt(self.size_dispatch),
            opt(self.exact),
            self.striped
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_family_a, generate_fan};

    #[test]
    fn family_a_row() {
        let g = generate_family_a(5).unwrap();
        let row = ReportRow::compute("A-q5", &g, DEFAULT_EXACT_CUTOFF, None).unwrap();
        assert_eq!((row.n, row.t, row.exact, row.striped), (10, 2, Some(6), true));
        assert_eq!(row.to_string().split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn triangle_row_has_dashes() {
        let g = generate_fan(3).unwrap();
        let row = ReportRow::compute("k3", &g, DEFAULT_EXACT_CUTOFF, None).unwrap();
        assert_eq!(row.to_string(), "k3,3,3,2,3,0,2,-,-,-,2,true");
    }

    #[test]
    fn cutoff_skips_exact() {
        let g = generate_fan(12).unwrap();
        let row = ReportRow::compute("f", &g, 10, None).unwrap();
        assert_eq!(row.exact, None);
    }

    #[test]
    fn check_flags_violations() {
        let g = generate_fan(8).unwrap();
        let mut row = ReportRow::compute("f", &g, 18, None).unwrap();
        row.exact = Some(row.size_peel + 1);
        assert!(matches!(row.check(), Err(Error::InvariantViolation(_))));
    }
}
