//! Optional on-disk persistence for the memoized structure-map tables.
//!
//! When `STEENROD_CACHE_DIR` is set, previously computed tables are loaded
//! before a command runs and the merged tables are written back afterwards.
//! The file is a little-endian binary table behind a versioned magic string;
//! unreadable or mismatched files are ignored and simply regenerated.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use steenrod::barratt_eccles::{psi_be_memo_install, psi_be_memo_snapshot, BeKey};
use steenrod::coeff::{Element, Ring};
use steenrod::perm::Permutation;
use steenrod::surjection::{psi_sj_memo_install, psi_sj_memo_snapshot, SjKey};

const MAGIC: &[u8; 8] = b"PSITBL01";
const FILE_NAME: &str = "psi-tables.bin";

pub fn cache_file() -> Option<PathBuf> {
    std::env::var_os("STEENROD_CACHE_DIR").map(|dir| Path::new(&dir).join(FILE_NAME))
}

/// Load cached tables if the environment asks for them. Errors are not
/// fatal: a missing or stale cache only costs recomputation.
pub fn load() {
    let Some(path) = cache_file() else { return };
    let Ok(bytes) = std::fs::read(&path) else { return };
    if let Some((sj, be)) = decode(&bytes) {
        psi_sj_memo_install(sj);
        psi_be_memo_install(be);
    }
}

/// Write the current tables back, atomically, if the environment asks for
/// persistence.
pub fn store() {
    let Some(path) = cache_file() else { return };
    let Some(dir) = path.parent() else { return };
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let bytes = encode(&psi_sj_memo_snapshot(), &psi_be_memo_snapshot());
    if let Ok(mut tmp) = tempfile::NamedTempFile::new_in(dir) {
        if tmp.write_all(&bytes).is_ok() {
            let _ = tmp.persist(&path);
        }
    }
}

fn encode(
    sj: &[((usize, u32), Element<SjKey>)],
    be: &[((usize, u32), Element<BeKey>)],
) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(sj.len() as u64).to_le_bytes());
    for ((r, n), element) in sj {
        out.extend_from_slice(&(*r as u32).to_le_bytes());
        out.extend_from_slice(&n.to_le_bytes());
        out.extend_from_slice(&(element.iter().count() as u64).to_le_bytes());
        for (key, coeff) in element.iter() {
            out.extend_from_slice(&(key.0.len() as u32).to_le_bytes());
            out.extend_from_slice(&key.0);
            out.extend_from_slice(&coeff.to_le_bytes());
        }
    }
    out.extend_from_slice(&(be.len() as u64).to_le_bytes());
    for ((r, n), element) in be {
        out.extend_from_slice(&(*r as u32).to_le_bytes());
        out.extend_from_slice(&n.to_le_bytes());
        out.extend_from_slice(&(element.iter().count() as u64).to_le_bytes());
        for (key, coeff) in element.iter() {
            out.extend_from_slice(&(key.0.len() as u32).to_le_bytes());
            for perm in &key.0 {
                out.extend_from_slice(perm.images());
            }
            out.extend_from_slice(&coeff.to_le_bytes());
        }
    }
    out
}

type Tables = (
    Vec<((usize, u32), Element<SjKey>)>,
    Vec<((usize, u32), Element<BeKey>)>,
);

fn decode(bytes: &[u8]) -> Option<Tables> {
    let mut r = bytes;
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic).ok()?;
    if &magic != MAGIC {
        return None;
    }
    let mut sj = Vec::new();
    for _ in 0..read_u64(&mut r)? {
        let arity = read_u32(&mut r)? as usize;
        let n = read_u32(&mut r)?;
        let mut element = Element::zero(Ring::Int);
        for _ in 0..read_u64(&mut r)? {
            let len = read_u32(&mut r)? as usize;
            let mut seq = vec![0u8; len];
            r.read_exact(&mut seq).ok()?;
            let coeff = read_i64(&mut r)?;
            element.add_term(SjKey::new(seq, arity)?, coeff);
        }
        sj.push(((arity, n), element));
    }
    let mut be = Vec::new();
    for _ in 0..read_u64(&mut r)? {
        let arity = read_u32(&mut r)? as usize;
        let n = read_u32(&mut r)?;
        let mut element = Element::zero(Ring::Int);
        for _ in 0..read_u64(&mut r)? {
            let len = read_u32(&mut r)? as usize;
            let mut tuple = Vec::with_capacity(len);
            for _ in 0..len {
                let mut images = vec![0u8; arity];
                r.read_exact(&mut images).ok()?;
                tuple.push(permutation(images, arity)?);
            }
            let coeff = read_i64(&mut r)?;
            element.add_term(BeKey::new(tuple)?, coeff);
        }
        be.push(((arity, n), element));
    }
    if r.is_empty() {
        Some((sj, be))
    } else {
        None
    }
}

/// Validate untrusted bytes before handing them to the permutation type,
/// whose constructor insists on well-formed input.
fn permutation(images: Vec<u8>, arity: usize) -> Option<Permutation> {
    let mut seen = vec![false; arity];
    for &v in &images {
        let v = v as usize;
        if v == 0 || v > arity || seen[v - 1] {
            return None;
        }
        seen[v - 1] = true;
    }
    Some(Permutation::from_images(images))
}

fn read_u32(r: &mut impl Read) -> Option<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b).ok()?;
    Some(u32::from_le_bytes(b))
}

fn read_u64(r: &mut impl Read) -> Option<u64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).ok()?;
    Some(u64::from_le_bytes(b))
}

fn read_i64(r: &mut impl Read) -> Option<i64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b).ok()?;
    Some(i64::from_le_bytes(b))
}
