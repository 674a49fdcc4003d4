//! The `planar_code` binary format.
//!
//! A stream starts with the header `>>planar_code<<`. Each graph follows as
//! its vertex count and then, per vertex, its clockwise neighbours numbered
//! from 1 and terminated by 0. Graphs with up to 255 vertices use one byte
//! per entry; larger ones start with a 0 byte and use little-endian `u16`s.

use std::io::Write;

use crate::error::{Error, Result};
use crate::planar_map::{DualFullerene, PrimalFullerene};

pub const HEADER: &[u8] = b">>planar_code<<";

/// Encodes one graph, without the stream header.
pub fn encode(rot: &[Vec<usize>], out: &mut Vec<u8>) -> Result<()> {
    let n = rot.len();
    if n > u16::MAX as usize {
        return Err(Error::InvalidInput(format!("{n} vertices do not fit the format")));
    }
    if n <= 255 {
        out.push(n as u8);
        for r in rot {
            out.extend(r.iter().map(|&u| (u + 1) as u8));
            out.push(0);
        }
    } else {
        out.push(0);
        out.extend((n as u16).to_le_bytes());
        for r in rot {
            for &u in r {
                out.extend(((u + 1) as u16).to_le_bytes());
            }
            out.extend(0u16.to_le_bytes());
        }
    }
    Ok(())
}

/// Writes graphs to a byte sink, emitting the header before the first one.
pub struct PlanarCodeWriter<W: Write> {
    out: W,
    started: bool,
    buf: Vec<u8>,
}

impl<W: Write> PlanarCodeWriter<W> {
    pub fn new(out: W) -> Self {
        PlanarCodeWriter { out, started: false, buf: Vec::new() }
    }

    pub fn write_rotations(&mut self, rot: &[Vec<usize>]) -> Result<()> {
        self.buf.clear();
        if !self.started {
            self.buf.extend_from_slice(HEADER);
            self.started = true;
        }
        encode(rot, &mut self.buf)?;
        self.out.write_all(&self.buf)?;
        Ok(())
    }

    pub fn write_primal(&mut self, p: &PrimalFullerene) -> Result<()> {
        self.write_rotations(&p.rotations())
    }

    pub fn write_dual(&mut self, g: &DualFullerene) -> Result<()> {
        self.write_rotations(&g.rotations())
    }

    pub fn flush(&mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

/// Decodes a whole stream into rotation systems. The header is optional.
pub fn decode(bytes: &[u8]) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut pos = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut graphs = Vec::new();
    let truncated = || Error::Format("truncated graph".into());
    while pos < bytes.len() {
        let wide = bytes[pos] == 0;
        pos += 1;
        let read = |pos: &mut usize| -> Result<usize> {
            if wide {
                let b = bytes.get(*pos..*pos + 2).ok_or_else(truncated)?;
                *pos += 2;
                Ok(u16::from_le_bytes([b[0], b[1]]) as usize)
            } else {
                let b = *bytes.get(*pos).ok_or_else(truncated)?;
                *pos += 1;
                Ok(b as usize)
            }
        };
        let n = if wide { read(&mut pos)? } else { bytes[pos - 1] as usize };
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let mut r = Vec::new();
            loop {
                let x = read(&mut pos)?;
                if x == 0 {
                    break;
                }
                if x > n {
                    return Err(Error::Format(format!("vertex {} lists neighbour {x} of {n}", v + 1)));
                }
                r.push(x - 1);
            }
            rot.push(r);
        }
        graphs.push(rot);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{build_seed, SeedKind};

    #[test]
    fn round_trip_small_and_wide() {
        let small = build_seed(SeedKind::C20).to_primal();
        let wide = build_seed(SeedKind::Nanotube(30)).to_primal();
        assert!(wide.order() > 255);
        let mut w = PlanarCodeWriter::new(Vec::new());
        w.write_primal(&small).unwrap();
        w.write_primal(&wide).unwrap();
        let bytes = w.into_inner();
        assert!(bytes.starts_with(HEADER));
        assert_eq!(bytes[HEADER.len()], 20);
        let back = decode(&bytes).unwrap();
        assert_eq!(back, vec![small.rotations(), wide.rotations()]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode(&[3, 2, 0, 9, 0]).is_err());
        assert!(decode(&[4, 2, 3]).is_err());
    }
}
