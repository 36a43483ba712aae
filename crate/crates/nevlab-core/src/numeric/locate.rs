//! Zero localization in a rectangle by argument-principle counting on a
//! quadtree of cells, with Newton refinement.
//!
//! The winding number of f around a cell boundary counts zeros minus
//! poles inside. Cells are split until each holds a single localized zero
//! cluster, with three safeguards: boundary walks refine until successive
//! phase steps are small (a large step means a zero/pole hugs the edge),
//! cells containing known poles are split until the pole is isolated and
//! discarded, and anything still ambiguous at the minimum cell size is
//! flagged rather than resolved silently.

use num_complex::Complex64;

use crate::numeric::Rect;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct LocateOutcome {
    pub zeros: Vec<(Complex64, u32)>,
    /// Cells where the boundary walk or the refinement gave up.
    pub flagged: Vec<Rect>,
    pub cells_processed: usize,
}

/// Phase change of f along the segment [a, b], refined until each step
/// turns by less than π/2. Errors when refinement bottoms out (a zero or
/// pole sits essentially on the segment).
fn phase_change(
    f: &dyn Fn(Complex64) -> Complex64,
    a: Complex64,
    b: Complex64,
    depth: u32,
) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    if !fa.is_finite() || !fb.is_finite() || fa.norm() == 0.0 || fb.norm() == 0.0 {
        return Err(Error::Numeric("boundary sample vanished or overflowed".into()));
    }
    let step = (fb / fa).arg();
    if step.abs() <= std::f64::consts::FRAC_PI_2 {
        return Ok(step);
    }
    if depth == 0 {
        return Err(Error::Numeric("phase refinement exhausted".into()));
    }
    let mid = (a + b) / 2.0;
    Ok(phase_change(f, a, mid, depth - 1)? + phase_change(f, mid, b, depth - 1)?)
}

/// Winding number of f around the rectangle boundary.
fn winding_number(f: &dyn Fn(Complex64) -> Complex64, rect: &Rect) -> Result<i64> {
    let corners = [
        Complex64::new(rect.x0, rect.y0),
        Complex64::new(rect.x1, rect.y0),
        Complex64::new(rect.x1, rect.y1),
        Complex64::new(rect.x0, rect.y1),
        Complex64::new(rect.x0, rect.y0),
    ];
    let samples_per_side = 8;
    let mut total = 0.0;
    for side in corners.windows(2) {
        for i in 0..samples_per_side {
            let t0 = i as f64 / samples_per_side as f64;
            let t1 = (i + 1) as f64 / samples_per_side as f64;
            let a = side[0] + (side[1] - side[0]) * t0;
            let b = side[0] + (side[1] - side[0]) * t1;
            total += phase_change(f, a, b, 28)?;
        }
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let rounded = turns.round();
    if (turns - rounded).abs() > 0.25 {
        return Err(Error::Numeric(format!(
            "winding number did not certify: {turns}"
        )));
    }
    Ok(rounded as i64)
}

fn newton_refine(
    f: &dyn Fn(Complex64) -> Complex64,
    df: &dyn Fn(Complex64) -> Complex64,
    mut z: Complex64,
    iterations: usize,
) -> Complex64 {
    for _ in 0..iterations {
        let fv = f(z);
        let dv = df(z);
        if !fv.is_finite() || !dv.is_finite() || dv.norm() == 0.0 {
            break;
        }
        let step = fv / dv;
        if !step.is_finite() {
            break;
        }
        z -= step;
        if step.norm() < 1e-14 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Split slightly off-center so that a zero or pole sitting exactly at a
/// cell center never lands on the shared edge of the children.
const SPLIT_RATIO: f64 = 0.5 + 1e-3;

fn split(rect: &Rect) -> [Rect; 4] {
    let xm = rect.x0 + (rect.x1 - rect.x0) * SPLIT_RATIO;
    let ym = rect.y0 + (rect.y1 - rect.y0) * SPLIT_RATIO;
    [
        Rect { x0: rect.x0, x1: xm, y0: rect.y0, y1: ym },
        Rect { x0: xm, x1: rect.x1, y0: rect.y0, y1: ym },
        Rect { x0: rect.x0, x1: xm, y0: ym, y1: rect.y1 },
        Rect { x0: xm, x1: rect.x1, y0: ym, y1: rect.y1 },
    ]
}

/// Locate the zeros of f in `rect`. `known_poles` lets meromorphic inputs
/// work: cells containing a listed pole are subdivided until the pole is
/// isolated, then dropped.
pub fn locate_zeros(
    f: &dyn Fn(Complex64) -> Complex64,
    df: &dyn Fn(Complex64) -> Complex64,
    rect: Rect,
    known_poles: &[(Complex64, u32)],
    min_cell: f64,
    max_cells: usize,
) -> Result<LocateOutcome> {
    let mut queue = vec![rect];
    let mut zeros: Vec<(Complex64, u32)> = Vec::new();
    let mut flagged = Vec::new();
    let mut cells_processed = 0usize;

    while let Some(cell) = queue.pop() {
        cells_processed += 1;
        if cells_processed > max_cells {
            return Err(Error::Numeric(format!(
                "cell budget exhausted after {max_cells} cells"
            )));
        }
        let poles_inside: Vec<_> = known_poles
            .iter()
            .filter(|(p, _)| cell.contains(*p))
            .collect();
        if !poles_inside.is_empty() {
            if cell.max_side() <= min_cell
                || (poles_inside.len() == 1 && cell.max_side() <= 16.0 * min_cell)
            {
                // Pole isolated; not a zero, drop the cell.
                continue;
            }
            queue.extend(split(&cell));
            continue;
        }
        let w = match winding_number(f, &cell) {
            Ok(w) => w,
            Err(_) => {
                if cell.max_side() > min_cell {
                    queue.extend(split(&cell));
                } else {
                    flagged.push(cell);
                }
                continue;
            }
        };
        if w == 0 {
            continue;
        }
        if w < 0 {
            // An unlisted pole; treat like an ill-conditioned cell.
            if cell.max_side() > min_cell {
                queue.extend(split(&cell));
            } else {
                flagged.push(cell);
            }
            continue;
        }
        if w == 1 || cell.max_side() <= min_cell {
            let z = newton_refine(f, df, cell.center(), 60);
            let inside = cell.contains(z)
                || (z - cell.center()).norm() <= 2.0 * cell.max_side();
            if inside && f(z).norm().is_finite() {
                zeros.push((z, w.max(1) as u32));
            } else {
                flagged.push(cell);
            }
            continue;
        }
        queue.extend(split(&cell));
    }

    // Cells can double-report a zero that sits close to a shared edge
    // (Newton pulls both centers to the same point); merge those.
    let mut merged: Vec<(Complex64, u32)> = Vec::new();
    'outer: for (z, m) in zeros {
        for (existing, _) in merged.iter() {
            if (*existing - z).norm() < 1e-9 * (1.0 + z.norm()) {
                continue 'outer;
            }
        }
        merged.push((z, m));
    }
    Ok(LocateOutcome {
        zeros: merged,
        flagged,
        cells_processed,
    })
}
