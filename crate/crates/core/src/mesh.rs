//! Wavefront OBJ export of sampled helicoid surfaces.

use std::io::Write;

use crate::error::Result;
use crate::helicoid::{sample_surface, HelicoidParams};
use crate::numerics::GridSpec;

/// Writes the sampled surface as OBJ: one `v x y h` line per grid sample in
/// row-major order, then two triangles per grid quad, split along the
/// (i, j) -> (i+1, j+1) diagonal. Vertex indices are 1-based and line
/// endings are LF.
pub fn write_obj<W: Write>(out: &mut W, p: HelicoidParams, spec: &GridSpec) -> Result<usize> {
    let points = sample_surface(p, spec)?;
    let mut written = 0usize;
    for q in &points {
        writeln_lf(out, &format!("v {} {} {}", q.x, q.y, q.h))?;
        written += 1;
    }
    let nv = spec.nv;
    for i in 0..spec.nu - 1 {
        for j in 0..spec.nv - 1 {
            // 1-based corners of the quad at (i, j).
            let a = i * nv + j + 1;
            let b = i * nv + j + 2;
            let c = (i + 1) * nv + j + 1;
            let d = (i + 1) * nv + j + 2;
            writeln_lf(out, &format!("f {} {} {}", a, c, d))?;
            writeln_lf(out, &format!("f {} {} {}", a, d, b))?;
        }
    }
    Ok(written)
}

fn writeln_lf<W: Write>(out: &mut W, line: &str) -> Result<()> {
    out.write_all(line.as_bytes())?;
    out.write_all(b"\n")?;
    Ok(())
}
