//! Krull-Schmidt decomposition by Fitting splitting.
//!
//! Endomorphisms are sampled from End(M); whenever one has a characteristic
//! polynomial with at least two coprime irreducible parts, M splits into the
//! generalized kernels of the parts and the pieces recurse. A piece is
//! accepted as indecomposable exactly when classification assigns it a
//! single geometric object and an explicit isomorphism from the canonical
//! form is found; the assembled certificate is verified before returning.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_space, is_isomorphic, random_combination};
use super::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactnum::{factor, Mat, Poly};
use crate::geom::{band_module, classify, string_module, GeomObject};
use crate::quiver::DimVector;

/// One isomorphism class of indecomposable summand.
#[derive(Debug, Clone)]
pub struct Summand {
    pub object: GeomObject,
    pub multiplicity: usize,
    /// Canonical form of a single copy.
    pub rep: Representation,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Isomorphism from the direct sum of canonical forms (summands in
    /// order, multiplicities expanded) onto the decomposed module.
    pub certificate: Morphism,
}

impl Decomposition {
    pub fn canonical_form(&self, m: &Representation) -> Representation {
        let parts: Vec<Representation> = self
            .summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.rep.clone(), s.multiplicity))
            .collect();
        if parts.is_empty() {
            Representation::zero(&m.quiver, m.field)
        } else {
            super::hom::direct_sum(&parts).expect("summands share the quiver")
        }
    }

    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

struct Piece {
    rep: Representation,
    /// Embedding of the piece into the original module, one block per vertex
    /// (original dim x piece dim).
    embedding: Vec<Mat>,
}

/// Decompose into indecomposables with an explicit certificate.
pub fn decompose(m: &Representation, seed: u64) -> Result<Decomposition> {
    m.validate()?;
    let f = m.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let whole = Piece {
        rep: m.clone(),
        embedding: (1..=m.quiver.n_vertices)
            .map(|x| Mat::identity(&f, m.dim_at(x)))
            .collect(),
    };
    let mut leaves: Vec<(GeomObject, Piece, Morphism)> = Vec::new();
    let mut stack = vec![whole];
    while let Some(piece) = stack.pop() {
        if piece.rep.is_zero() {
            continue;
        }
        match split_once(&piece, &mut rng)? {
            SplitOutcome::Split(parts) => stack.extend(parts),
            SplitOutcome::Leaf(object, iso) => leaves.push((object, piece, iso)),
        }
    }

    leaves.sort_by(|a, b| a.0.cmp(&b.0));

    // Assemble summand records and the certificate blocks, in leaf order.
    let mut summands: Vec<Summand> = Vec::new();
    let mut blocks: Vec<Vec<Mat>> = vec![Vec::new(); m.quiver.n_vertices];
    for (object, piece, iso) in &leaves {
        match summands.last_mut() {
            Some(last) if last.object == *object => last.multiplicity += 1,
            _ => {
                let canon = canonical_rep(m, object)?;
                summands.push(Summand {
                    object: object.clone(),
                    multiplicity: 1,
                    rep: canon,
                });
            }
        }
        for (x, block_col) in blocks.iter_mut().enumerate() {
            block_col.push(piece.embedding[x].mul(&f, &iso.blocks[x]));
        }
    }
    let certificate = Morphism {
        blocks: blocks
            .iter()
            .enumerate()
            .map(|(x, bs)| {
                if bs.is_empty() {
                    Mat::zero(&f, m.dims.0[x], 0)
                } else {
                    let refs: Vec<&Mat> = bs.iter().collect();
                    Mat::hcat(&f, &refs)
                }
            })
            .collect(),
    };

    let decomposition = Decomposition {
        summands,
        certificate,
    };
    // Verify: the certificate must be a commuting isomorphism, and the
    // dimension accounting has to close.
    let canon = decomposition.canonical_form(m);
    if canon.dims != m.dims
        || !decomposition.certificate.is_invertible(&f)
        || !decomposition.certificate.commutes(&canon, m)
    {
        return Err(Error::CertificateFailure);
    }
    Ok(decomposition)
}

fn canonical_rep(m: &Representation, object: &GeomObject) -> Result<Representation> {
    match object {
        GeomObject::BandObj { .. } => band_module(&m.quiver, m.field, object),
        _ => string_module(&m.quiver, m.field, object),
    }
}

enum SplitOutcome {
    Split(Vec<Piece>),
    Leaf(GeomObject, Morphism),
}

/// Split a nonzero piece once, or certify it indecomposable.
fn split_once(piece: &Piece, rng: &mut ChaCha8Rng) -> Result<SplitOutcome> {
    let m = &piece.rep;
    let f = m.field;
    let end_basis = hom_space(m, m)?;
    debug_assert!(!end_basis.is_empty());

    if end_basis.len() > 1 {
        for theta in candidate_endomorphisms(m, &end_basis, rng) {
            if let Some(parts) = try_split(piece, &theta)? {
                return Ok(SplitOutcome::Split(parts));
            }
        }
    }

    // No splitter found: certify indecomposability via the canonical form.
    let attempt = |rng: &mut ChaCha8Rng| -> Result<Option<(GeomObject, Morphism)>> {
        let object = classify(m)?;
        let canon = canonical_rep(m, &object)?;
        Ok(is_isomorphic(&canon, m, rng)?.map(|iso| (object, iso)))
    };
    match attempt(rng) {
        Ok(Some((object, iso))) => Ok(SplitOutcome::Leaf(object, iso)),
        other => {
            // One longer randomized round before giving up: a missed split
            // and a failed certificate are indistinguishable here.
            for _ in 0..200 {
                if let Some(theta) = random_combination(&f, &end_basis, rng) {
                    if let Some(parts) = try_split(piece, &theta)? {
                        return Ok(SplitOutcome::Split(parts));
                    }
                }
            }
            match other {
                Ok(Some(leaf)) => Ok(SplitOutcome::Leaf(leaf.0, leaf.1)),
                Ok(None) => Err(Error::CertificateFailure),
                Err(Error::NotIndecomposable) => Err(Error::CertificateFailure),
                Err(e) => Err(e),
            }
        }
    }
}

/// Candidate endomorphisms: the basis sweep, pairwise sums, seeded random
/// combinations, and radical products f(theta) o sigma for primary theta.
fn candidate_endomorphisms(
    m: &Representation,
    basis: &[Morphism],
    rng: &mut ChaCha8Rng,
) -> Vec<Morphism> {
    let f = m.field;
    let mut out: Vec<Morphism> = Vec::new();
    out.extend(basis.iter().cloned());
    for i in 0..basis.len().min(8) {
        for j in (i + 1)..basis.len().min(8) {
            out.push(basis[i].add(&f, &basis[j]));
        }
    }
    for _ in 0..(24 + 8 * basis.len()) {
        if let Some(c) = random_combination(&f, basis, rng) {
            out.push(c);
        }
    }
    // Radical products: when theta's characteristic polynomial is a power of
    // a single irreducible f with f(theta) nonzero, f(theta) is a zero
    // divisor and composing with basis elements often produces a splitter.
    let primaries: Vec<Morphism> = out
        .iter()
        .take(basis.len() + 12)
        .filter_map(|theta| {
            let cp = total_char_poly(m, theta).ok()?;
            let factors = factor(&f, &cp).ok()?;
            if factors.len() != 1 {
                return None;
            }
            let (irr, _) = &factors[0];
            let ftheta = apply_poly(m, theta, irr);
            (!ftheta.is_zero(&f)).then_some(ftheta)
        })
        .collect();
    for ftheta in primaries {
        for sigma in basis {
            out.push(ftheta.compose(&f, sigma));
            out.push(sigma.compose(&f, &ftheta));
        }
    }
    out
}

fn total_char_poly(m: &Representation, theta: &Morphism) -> Result<Poly> {
    let f = m.field;
    let mut cp = Poly::one(&f);
    for block in &theta.blocks {
        if block.rows > 0 {
            cp = cp.mul(&f, &block.char_poly(&f)?);
        }
    }
    Ok(cp)
}

fn apply_poly(m: &Representation, theta: &Morphism, p: &Poly) -> Morphism {
    let f = m.field;
    Morphism {
        blocks: theta.blocks.iter().map(|b| p.eval_mat(&f, b)).collect(),
    }
}

/// Split along the primary decomposition of theta's action if its total
/// characteristic polynomial has at least two distinct irreducible factors.
fn try_split(piece: &Piece, theta: &Morphism) -> Result<Option<Vec<Piece>>> {
    let m = &piece.rep;
    let f = m.field;
    let cp = total_char_poly(m, theta)?;
    let factors = match factor(&f, &cp) {
        Ok(fs) => fs,
        // Unsupported factorization of a candidate is not fatal; another
        // theta may split. Real band-classification failures resurface in
        // classify.
        Err(Error::NonSplitField(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if factors.len() < 2 {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(factors.len());
    for (irr, _) in &factors {
        // Generalized kernel of irr(theta), vertex-wise.
        let kernels: Vec<Mat> = theta
            .blocks
            .iter()
            .map(|b| {
                let fb = irr.eval_mat(&f, b);
                // Power up to the vertex dimension so the kernel stabilizes.
                let mut power = Mat::identity(&f, fb.rows);
                for _ in 0..fb.rows {
                    power = power.mul(&f, &fb);
                }
                power.kernel(&f)
            })
            .collect();
        let dims = DimVector(kernels.iter().map(|k| k.cols).collect());
        if dims.total() == 0 || dims.total() == m.total_dim() {
            // A factor supported nowhere or everywhere cannot split; with
            // >= 2 factors of a block-diagonal action this cannot happen.
            return Ok(None);
        }
        let maps = (0..m.quiver.n_arrows())
            .map(|a| {
                let (s, t) = m.quiver.arrows[a];
                let moved = m.maps[a].mul(&f, &kernels[s - 1]);
                kernels[t - 1]
                    .solve_mat(&f, &moved)
                    .expect("generalized kernels are subrepresentations")
            })
            .collect();
        let rep = Representation {
            quiver: m.quiver.clone(),
            field: f,
            dims,
            maps,
        };
        let embedding = kernels
            .iter()
            .enumerate()
            .map(|(x, k)| piece.embedding[x].mul(&f, k))
            .collect();
        parts.push(Piece { rep, embedding });
    }
    Ok(Some(parts))
}
