use dunkl_core::config::{GRID_K, GRID_KERNEL_X, GRID_SCAN_FRACTIONS};
use dunkl_core::operators::positivity_scan_with;
use dunkl_core::verify::{run_suite, Suite, VerifyOptions};
use dunkl_core::{
    opdam_g, Complex64, Intertwiner, IntertwiningKernel, KernelPoint, Multiplicity, QuadSettings,
    SpectralParam, TestFunction,
};

use crate::report::{Record, Report};
use crate::{Command, Failure, KArgs, Method, Status};

fn bad_args(message: impl Into<String>) -> Failure {
    Failure {
        status: Status::BadArgs,
        message: message.into(),
    }
}

impl KArgs {
    fn multiplicity(&self) -> Result<Multiplicity, Failure> {
        let k = if self.k1_im == 0.0 && self.k2_im == 0.0 {
            Multiplicity::new(self.k1, self.k2)?
        } else {
            Multiplicity::complex(
                Complex64::new(self.k1, self.k1_im),
                Complex64::new(self.k2, self.k2_im),
            )?
        };
        Ok(k)
    }

    fn record(&self) -> Record {
        Record::new()
            .with("k1", Complex64::new(self.k1, self.k1_im))
            .with("k2", Complex64::new(self.k2, self.k2_im))
    }
}

/// Parses `lo:hi:count` into `count` evenly spaced values.
pub fn parse_range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err(format!("range '{s}' must be lo:hi:count"));
    };
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound in '{s}'"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound in '{s}'"))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| format!("bad count in '{s}'"))?;
    if n == 0 || !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(format!("range '{s}' needs count >= 1 and finite lo <= hi"));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
        .collect())
}

fn range_or(s: &Option<String>, default: Vec<f64>) -> Result<Vec<f64>, Failure> {
    s.as_deref()
        .map_or(Ok(default), |s| parse_range(s).map_err(bad_args))
}

pub fn execute(cmd: &Command, settings: QuadSettings) -> Result<(Report, Status), Failure> {
    match cmd {
        Command::Kernel { k, x, y, method } => {
            let kernel = IntertwiningKernel::with_settings(k.multiplicity()?, settings)?;
            let p = KernelPoint::new(*x, *y)?;
            let (r, name) = match method {
                Method::Direct => (kernel.eval(p)?, "direct"),
                Method::Mourou => (kernel.eval_assembled(p)?, "mourou"),
            };
            let rec = k
                .record()
                .with("x", *x)
                .with("y", *y)
                .with("method", name)
                .with("value", r.value)
                .with("est_error", r.est_error);
            Ok((Report::Point(rec), Status::Ok))
        }
        Command::Opdam {
            k1,
            k2,
            lambda,
            lambda_im,
            x,
        } => {
            let k = Multiplicity::new(*k1, *k2)?;
            let lam = Complex64::new(*lambda, *lambda_im);
            let v = opdam_g(&k, SpectralParam::new(lam)?, *x)?;
            let rec = Record::new()
                .with("k1", *k1)
                .with("k2", *k2)
                .with("lambda", lam)
                .with("x", *x)
                .with("value", v);
            Ok((Report::Point(rec), Status::Ok))
        }
        Command::ApplyV { k, function, x } => {
            let op = Intertwiner::with_settings(k.multiplicity()?, settings)?;
            let f = TestFunction::from_id(function)?;
            let r = op.apply_v(&f, *x)?;
            let rec = k
                .record()
                .with("function", f.id())
                .with("x", *x)
                .with("value", r.value)
                .with("est_error", r.est_error);
            Ok((Report::Point(rec), Status::Ok))
        }
        Command::ApplyVt { k, function, y } => {
            let op = Intertwiner::with_settings(k.multiplicity()?, settings)?;
            let g = TestFunction::from_id(function)?;
            let r = op.apply_vt(&g, *y)?;
            let rec = k
                .record()
                .with("function", g.id())
                .with("y", *y)
                .with("value", r.value)
                .with("est_error", r.est_error);
            Ok((Report::Point(rec), Status::Ok))
        }
        Command::Verify { suite, tol } => {
            let suite: Suite = suite.parse()?;
            let rows = run_suite(
                suite,
                &VerifyOptions {
                    settings,
                    tol: *tol,
                },
            )?;
            let all = rows.iter().all(|r| r.pass);
            let records = rows
                .into_iter()
                .map(|r| {
                    Record::new()
                        .with("check", r.check)
                        .with("point", r.point)
                        .with("lhs", r.lhs)
                        .with("rhs", r.rhs)
                        .with("gap", r.gap)
                        .with("tol", r.tol)
                        .with("pass", r.pass)
                })
                .collect();
            let status = if all { Status::Ok } else { Status::Failed };
            Ok((
                Report::Table {
                    rows: records,
                    summary: None,
                },
                status,
            ))
        }
        Command::Scan {
            k1_range,
            k2_range,
            x_range,
            y_frac_range,
        } => {
            let k1s = range_or(k1_range, GRID_K.to_vec())?;
            let k2s = range_or(k2_range, GRID_K.to_vec())?;
            let xs = range_or(
                x_range,
                GRID_KERNEL_X.iter().flat_map(|&x| [x, -x]).collect(),
            )?;
            let fr = range_or(y_frac_range, GRID_SCAN_FRACTIONS.to_vec())?;
            let ks: Vec<(f64, f64)> = k1s
                .iter()
                .flat_map(|&a| k2s.iter().map(move |&b| (a, b)))
                .collect();
            let rep = positivity_scan_with(settings, &ks, &xs, &fr)?;
            let rows = rep
                .cells
                .iter()
                .map(|c| {
                    Record::new()
                        .with("k1", c.k1)
                        .with("k2", c.k2)
                        .with("x", c.x)
                        .with("y", c.y)
                        .with("value", c.value)
                })
                .collect();
            let (a1, a2, ax, ay) = rep.argmin;
            let summary = Record::new()
                .with("min_value", rep.min_value)
                .with("argmin_k1", a1)
                .with("argmin_k2", a2)
                .with("argmin_x", ax)
                .with("argmin_y", ay)
                .with("all_positive", rep.all_positive)
                .with("cells", rep.cells.len());
            let status = if rep.all_positive {
                Status::Ok
            } else {
                Status::Failed
            };
            Ok((
                Report::Table {
                    rows,
                    summary: Some(summary),
                },
                status,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::parse_range;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0.5:0.5:1").unwrap(), vec![0.5]);
        assert_eq!(parse_range("-1:1:3").unwrap(), vec![-1.0, 0.0, 1.0]);
        assert_eq!(parse_range("0:1:5").unwrap().last(), Some(&1.0));
        for bad in ["1:0:3", "0:1:0", "0:1", "a:1:2", "0:1:2:3", "0:inf:2"] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }
}
