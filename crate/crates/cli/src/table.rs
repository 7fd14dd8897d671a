//! Binary dump of a solved table.
//!
//! All integers are little-endian.
//!
//! ```text
//! 0   [u8; 8]  magic "PURSUITT"
//! 8   u32      format version (1)
//! 12  u8       game: 0 classic, 1 attacking; then 3 zero bytes
//! 16  u32      n
//! 20  u32      k, cops on the top level
//! 24  u32      level count L
//! 28  u32      zero
//! 32  L × 24   level directory: cops u32, zero u32, multisets u64, offset u64
//! ..  data     per level at its offset: multisets·n cop-turn labels (u32),
//!              then multisets·n robber-turn labels (u32)
//! ```
//!
//! A label is the number of cop moves to capture; `0xFFFF_FFFF` marks a
//! robber win. Position `multiset_rank · n + robber` uses the colex rank of
//! the sorted cop multiset.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use pursuit_core::game::Level;
use pursuit_core::{GameKind, Side, SolveTable};

use crate::error::{CliError, CliResult};

pub const MAGIC: &[u8; 8] = b"PURSUITT";
pub const VERSION: u32 = 1;
const HEADER: u64 = 32;
const DIRECTORY_ENTRY: u64 = 24;

pub fn write_table(path: &Path, table: &SolveTable) -> CliResult<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    encode(&mut w, table).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))
}

pub fn encode(w: &mut impl Write, table: &SolveTable) -> std::io::Result<()> {
    let n = table.vertex_count() as u64;
    let levels = table.levels();
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&[game_byte(table.kind()), 0, 0, 0])?;
    w.write_all(&(n as u32).to_le_bytes())?;
    w.write_all(&(table.cops() as u32).to_le_bytes())?;
    w.write_all(&(levels.len() as u32).to_le_bytes())?;
    w.write_all(&0u32.to_le_bytes())?;
    let mut offset = HEADER + DIRECTORY_ENTRY * levels.len() as u64;
    for level in levels {
        w.write_all(&(level.cops() as u32).to_le_bytes())?;
        w.write_all(&0u32.to_le_bytes())?;
        w.write_all(&(level.multiset_count() as u64).to_le_bytes())?;
        w.write_all(&offset.to_le_bytes())?;
        offset += level.state_count() * 4;
    }
    for level in levels {
        for side in [Side::Cops, Side::Robber] {
            for &label in level.raw_labels(side) {
                w.write_all(&label.to_le_bytes())?;
            }
        }
    }
    Ok(())
}

fn game_byte(kind: GameKind) -> u8 {
    match kind {
        GameKind::Classic => 0,
        GameKind::Attacking => 1,
    }
}

pub fn read_table(path: &Path) -> CliResult<SolveTable> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut bytes = Vec::new();
    BufReader::new(file).read_to_end(&mut bytes).map_err(|e| CliError::io(path, e))?;
    decode(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Cursor<'_> {
    fn take(&mut self, len: usize) -> Result<&[u8], String> {
        let end = self.at.checked_add(len).filter(|&e| e <= self.bytes.len()).ok_or("truncated table")?;
        let out = &self.bytes[self.at..end];
        self.at = end;
        Ok(out)
    }

    fn u32(&mut self) -> Result<u32, String> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("four bytes")))
    }

    fn u64(&mut self) -> Result<u64, String> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("eight bytes")))
    }
}

pub fn decode(bytes: &[u8]) -> Result<SolveTable, String> {
    let mut c = Cursor { bytes, at: 0 };
    if c.take(8)? != MAGIC {
        return Err("not a table dump (bad magic)".into());
    }
    let version = c.u32()?;
    if version != VERSION {
        return Err(format!("unsupported table version {version}"));
    }
    let kind = match c.take(4)?[0] {
        0 => GameKind::Classic,
        1 => GameKind::Attacking,
        other => return Err(format!("unknown game byte {other}")),
    };
    let n = c.u32()? as usize;
    let k = c.u32()? as usize;
    let count = c.u32()? as usize;
    c.u32()?;
    let mut directory = Vec::with_capacity(count);
    for _ in 0..count {
        let cops = c.u32()? as usize;
        c.u32()?;
        let multisets = c.u64()? as usize;
        let offset = c.u64()? as usize;
        directory.push((cops, multisets, offset));
    }
    let mut levels = Vec::with_capacity(count);
    for (cops, multisets, offset) in directory {
        let states = multisets.checked_mul(n).ok_or("level too large")?;
        let mut d = Cursor { bytes, at: offset };
        let mut read = || -> Result<Vec<u32>, String> { (0..states).map(|_| d.u32()).collect() };
        let cop_turn = read()?;
        let robber_turn = read()?;
        levels.push(Level::from_raw(cops, multisets, cop_turn, robber_turn).map_err(|e| e.to_string())?);
    }
    let table = SolveTable::from_levels(kind, n, levels).map_err(|e| e.to_string())?;
    if table.cops() != k {
        return Err("header cop count does not match the levels".into());
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pursuit_core::constructions::petersen;
    use pursuit_core::{solve, SolveOptions};

    #[test]
    fn dump_round_trips() {
        for kind in [GameKind::Classic, GameKind::Attacking] {
            let table = solve(&petersen(), kind, 2, &SolveOptions::default()).unwrap();
            let mut bytes = Vec::new();
            encode(&mut bytes, &table).unwrap();
            assert_eq!(&bytes[..8], MAGIC);
            assert_eq!(decode(&bytes).unwrap(), table);
            assert!(decode(&bytes[..bytes.len() - 1]).is_err());
        }
    }

    #[test]
    fn header_layout() {
        let table = solve(&petersen(), GameKind::Attacking, 1, &SolveOptions::default()).unwrap();
        let mut bytes = Vec::new();
        encode(&mut bytes, &table).unwrap();
        assert_eq!(bytes[12], 1);
        assert_eq!(u32::from_le_bytes(bytes[16..20].try_into().unwrap()), 10);
        assert_eq!(u32::from_le_bytes(bytes[20..24].try_into().unwrap()), 1);
        assert_eq!(u32::from_le_bytes(bytes[24..28].try_into().unwrap()), 2);
        // Level 0 holds one multiset; its data follows the two directory entries.
        assert_eq!(u64::from_le_bytes(bytes[48..56].try_into().unwrap()), 80);
        assert_eq!(bytes.len(), 80 + 4 * (2 * 10 + 2 * 100));
    }
}
