//! Parameter sweeps along a shape family, tabulating the scale-invariant
//! functionals, their gaps to the extremal values, and requested
//! gap-to-asymmetry ratios as CSV.

use std::f64::consts::PI;
use std::fmt;

use super::families::{FamilySpec, Realization};
use super::HarnessError;
use crate::geometry::measure;
use crate::inequalities::{functional_suite, FunctionalSuite};
use crate::pde::functional_values;

/// Numerator of a tabulated ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioNumerator {
    /// `gap1` = F1 - 1/3, `gap2` = π²/4 - F2, `gap3` = 1/3 - F3,
    /// `gap4` = F4 - π²/4.
    Gap(u8),
    Alpha,
    Beta,
}

/// Denominator base of a tabulated ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioDenominator {
    /// The sweep parameter itself.
    Param,
    Alpha,
    Beta,
}

/// A ratio column `numerator / denominator^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatioSpec {
    pub numerator: RatioNumerator,
    pub denominator: RatioDenominator,
    pub exponent: u32,
}

impl RatioSpec {
    /// Parses `gap1/param`, `gap2/beta^4`, `beta/param`, `gap4/alpha^2`, ...
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let bad = || HarnessError::InvalidRatio(text.to_string());
        let (num, den) = text.split_once('/').ok_or_else(bad)?;
        let numerator = match num {
            "gap1" => RatioNumerator::Gap(1),
            "gap2" => RatioNumerator::Gap(2),
            "gap3" => RatioNumerator::Gap(3),
            "gap4" => RatioNumerator::Gap(4),
            "alpha" => RatioNumerator::Alpha,
            "beta" => RatioNumerator::Beta,
            _ => return Err(bad()),
        };
        let (base, exponent) = match den.split_once('^') {
            Some((base, exp)) => (base, exp.parse::<u32>().map_err(|_| bad())?),
            None => (den, 1),
        };
        if exponent == 0 {
            return Err(bad());
        }
        let denominator = match base {
            "param" => RatioDenominator::Param,
            "alpha" => RatioDenominator::Alpha,
            "beta" => RatioDenominator::Beta,
            _ => return Err(bad()),
        };
        Ok(RatioSpec {
            numerator,
            denominator,
            exponent,
        })
    }
}

impl fmt::Display for RatioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.numerator {
            RatioNumerator::Gap(k) => write!(f, "gap{k}")?,
            RatioNumerator::Alpha => write!(f, "alpha")?,
            RatioNumerator::Beta => write!(f, "beta")?,
        }
        match self.denominator {
            RatioDenominator::Param => write!(f, "/param")?,
            RatioDenominator::Alpha => write!(f, "/alpha")?,
            RatioDenominator::Beta => write!(f, "/beta")?,
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// The default ratio columns for thinning sweeps: linear-in-parameter rates
/// for the first three gaps and the perimeter asymmetry, plus the quadratic
/// eigenvalue rate against the width asymmetry.
#[must_use]
pub fn thinning_ratio_specs() -> Vec<RatioSpec> {
    let linear = |n| RatioSpec {
        numerator: n,
        denominator: RatioDenominator::Param,
        exponent: 1,
    };
    vec![
        linear(RatioNumerator::Gap(1)),
        linear(RatioNumerator::Gap(2)),
        linear(RatioNumerator::Gap(3)),
        linear(RatioNumerator::Beta),
        RatioSpec {
            numerator: RatioNumerator::Gap(4),
            denominator: RatioDenominator::Alpha,
            exponent: 2,
        },
    ]
}

/// One sweep row: the parameter value, the asymmetries, the functionals,
/// their gaps, and the requested ratios.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub parameter: f64,
    pub suite: FunctionalSuite,
    pub gaps: [f64; 4],
    pub ratios: Vec<f64>,
}

/// A completed sweep.
#[derive(Clone, Debug)]
pub struct SweepTable {
    pub ratio_specs: Vec<RatioSpec>,
    pub rows: Vec<SweepRow>,
}

/// Gaps of the four functionals to their extremal values.
#[must_use]
pub fn functional_gaps(s: &FunctionalSuite) -> [f64; 4] {
    let quarter_pi_sq = PI * PI / 4.0;
    [
        s.f1 - 1.0 / 3.0,
        quarter_pi_sq - s.f2,
        1.0 / 3.0 - s.f3,
        s.f4 - quarter_pi_sq,
    ]
}

fn ratio_value(spec: &RatioSpec, parameter: f64, suite: &FunctionalSuite, gaps: &[f64; 4]) -> f64 {
    let numerator = match spec.numerator {
        RatioNumerator::Gap(k) => gaps[(k - 1) as usize],
        RatioNumerator::Alpha => suite.alpha,
        RatioNumerator::Beta => suite.beta,
    };
    let base = match spec.denominator {
        RatioDenominator::Param => parameter,
        RatioDenominator::Alpha => suite.alpha,
        RatioDenominator::Beta => suite.beta,
    };
    numerator / base.powi(spec.exponent as i32)
}

/// Sweeps the family's parameter over `params` (at least two values),
/// computing the functional suite for each member. Any failure aborts the
/// sweep, naming the offending parameter value.
pub fn sweep(
    template: &FamilySpec,
    params: &[f64],
    ratio_specs: &[RatioSpec],
    fem_tolerance: f64,
) -> Result<SweepTable, HarnessError> {
    if params.len() < 2 {
        return Err(HarnessError::InvalidFamily(format!(
            "a sweep needs at least 2 parameter values, got {}",
            params.len()
        )));
    }
    let mut rows = Vec::with_capacity(params.len());
    for &parameter in params {
        let row = sweep_row(template, parameter, ratio_specs, fem_tolerance).map_err(|e| {
            HarnessError::SweepFailure {
                parameter,
                message: e.to_string(),
            }
        })?;
        rows.push(row);
    }
    Ok(SweepTable {
        ratio_specs: ratio_specs.to_vec(),
        rows,
    })
}

fn sweep_row(
    template: &FamilySpec,
    parameter: f64,
    ratio_specs: &[RatioSpec],
    fem_tolerance: f64,
) -> Result<SweepRow, HarnessError> {
    let member = template.with_parameter(parameter)?;
    let suite = match member.realize()? {
        Realization::Polygon(polygon) => {
            let measurements = measure(&polygon)?;
            let values = functional_values(&polygon, fem_tolerance).map_err(
                crate::inequalities::InequalityError::from,
            )?;
            functional_suite(&measurements, &values)
        }
        Realization::ClosedForm(values) => values.functionals(),
    };
    let gaps = functional_gaps(&suite);
    let ratios = ratio_specs
        .iter()
        .map(|spec| ratio_value(spec, parameter, &suite, &gaps))
        .collect();
    Ok(SweepRow {
        parameter,
        suite,
        gaps,
        ratios,
    })
}

impl SweepTable {
    /// Renders the table as CSV: a header line, comma separators, LF line
    /// endings, shortest round-trip float formatting.
    #[must_use]
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param,alpha,beta,F1,F2,F3,F4,gap1,gap2,gap3,gap4");
        for spec in &self.ratio_specs {
            out.push(',');
            out.push_str(&spec.to_string());
        }
        out.push('\n');
        for row in &self.rows {
            let s = &row.suite;
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                row.parameter,
                s.alpha,
                s.beta,
                s.f1,
                s.f2,
                s.f3,
                s.f4,
                row.gaps[0],
                row.gaps[1],
                row.gaps[2],
                row.gaps[3]
            ));
            for r in &row.ratios {
                out.push_str(&format!(",{r}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_spec_grammar() {
        let spec = RatioSpec::parse("gap2/beta^4").unwrap();
        assert_eq!(spec.numerator, RatioNumerator::Gap(2));
        assert_eq!(spec.denominator, RatioDenominator::Beta);
        assert_eq!(spec.exponent, 4);
        assert_eq!(spec.to_string(), "gap2/beta^4");
        assert_eq!(
            RatioSpec::parse("beta/param").unwrap().to_string(),
            "beta/param"
        );
        assert!(RatioSpec::parse("gap5/param").is_err());
        assert!(RatioSpec::parse("gap1").is_err());
        assert!(RatioSpec::parse("gap1/volume").is_err());
        assert!(RatioSpec::parse("gap1/beta^0").is_err());
    }

    #[test]
    fn closed_form_sweep_produces_csv() {
        let template = FamilySpec::parse("thinning_box:3:0.2").unwrap();
        let table = sweep(
            &template,
            &[0.2, 0.1],
            &[RatioSpec::parse("gap1/beta^3").unwrap()],
            1e-6,
        )
        .unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            "param,alpha,beta,F1,F2,F3,F4,gap1,gap2,gap3,gap4,gap1/beta^3"
        );
        assert!(lines[1].starts_with("0.2,"));
        assert!(lines[2].starts_with("0.1,"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn fem_sweep_row_has_positive_gaps() {
        let template = FamilySpec::parse("rectangle:1:0.4").unwrap();
        let table = sweep(&template, &[0.5, 0.4], &thinning_ratio_specs(), 1e-4).unwrap();
        for row in &table.rows {
            assert!((row.suite.beta - row.parameter).abs() < 1e-9);
            for gap in row.gaps {
                assert!(gap > 0.0, "gap {gap} at {}", row.parameter);
            }
            for r in &row.ratios {
                assert!(r.is_finite() && *r > 0.0);
            }
        }
    }

    #[test]
    fn failures_name_the_parameter() {
        let template = FamilySpec::parse("sector:0.4").unwrap();
        let err = sweep(&template, &[0.2, -1.0], &[], 1e-6).unwrap_err();
        match err {
            HarnessError::SweepFailure { parameter, .. } => assert_eq!(parameter, -1.0),
            other => panic!("unexpected error {other}"),
        }
        let err = sweep(&template, &[0.2], &[], 1e-6).unwrap_err();
        assert!(matches!(err, HarnessError::InvalidFamily(_)));
    }
}
