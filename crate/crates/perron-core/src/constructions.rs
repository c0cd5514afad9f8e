//! Explicit realization of the two minimizing families: the rotation-plus-
//! twist maps f_{n,k} on nonorientable surfaces and the orientation-
//! reversing maps psi_k on orientable ones. Graphs, surface invariants,
//! defining polynomials, action matrices, and singularity data.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cyclotomic::strip_cyclotomic;
use crate::error::FamilyError;
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::roots::{newton_descent, Margins, NewtonDescent};

/// Parameters (n, k) of the family f_{n,k}: n curves arranged with
/// rotational symmetry, each intersecting the k cyclically farthest ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonorFamily {
    pub n: u64,
    pub k: u64,
}

impl NonorFamily {
    pub fn new(n: u64, k: u64) -> Result<Self, FamilyError> {
        if n < 3 || k < 1 || k > n - 1 {
            return Err(FamilyError::RangeViolation { n, k });
        }
        if n % 2 == k % 2 {
            return Err(FamilyError::ParityViolation { n, k });
        }
        Ok(NonorFamily { n, k })
    }

    /// r = (n - k + 1) / 2, the lowest exponent of the middle block of the
    /// defining polynomial. Integral by the parity requirement.
    pub fn r_half(&self) -> u64 {
        (self.n - self.k + 1) / 2
    }

    /// s = (n + k + 3) / 2, the offset of the interleaved boundary labels.
    pub fn s(&self) -> u64 {
        (self.n + self.k + 3) / 2
    }

    /// The curve system fills the surface exactly when its intersection
    /// graph is connected, which for these circulants means k >= 2
    /// (k = 1 on even n gives a disjoint union of antipodal chords).
    pub fn is_filling(&self) -> bool {
        self.k >= 2
    }

    /// Length of the polygonal boundary paths of the complementary
    /// regions: 4n / gcd(n, k).
    pub fn polygon_path_length(&self) -> u64 {
        4 * self.n / self.n.gcd(&self.k)
    }
}

/// Parameter k of the family psi_k (k even >= 2 for the full data; odd k
/// yields a surface but no singularity statement).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReversingFamily {
    pub k: u64,
}

impl ReversingFamily {
    pub fn new(k: u64) -> Result<Self, FamilyError> {
        if k < 2 || k % 2 != 0 {
            return Err(FamilyError::OddK(k));
        }
        Ok(ReversingFamily { k })
    }
}

/// Topological type of a compact surface with boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceInfo {
    pub euler_characteristic: i64,
    pub boundary_components: u64,
    pub genus: u64,
    pub orientable: bool,
}

impl SurfaceInfo {
    fn new(chi: i64, boundary: u64, genus: u64, orientable: bool) -> SurfaceInfo {
        let expect = if orientable {
            2 - 2 * genus as i64 - boundary as i64
        } else {
            2 - genus as i64 - boundary as i64
        };
        assert_eq!(chi, expect, "Euler characteristic mismatch");
        SurfaceInfo {
            euler_characteristic: chi,
            boundary_components: boundary,
            genus,
            orientable,
        }
    }
}

/// Multiset of prong counts of the singularities of the invariant
/// foliations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityType {
    pub prongs: Vec<u64>,
}

impl SingularityType {
    pub fn new(mut prongs: Vec<u64>) -> SingularityType {
        prongs.sort_unstable();
        SingularityType { prongs }
    }

    /// Sum of (prongs - 2); equals -2 chi of the closed carrier surface.
    pub fn prong_defect_sum(&self) -> i64 {
        self.prongs.iter().map(|&p| p as i64 - 2).sum()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prongs.is_empty() {
            return write!(f, "no singularities");
        }
        let all_equal = self.prongs.windows(2).all(|w| w[0] == w[1]);
        if all_equal && self.prongs.len() > 5 {
            write!(f, "({}^{})", self.prongs[0], self.prongs.len())
        } else {
            let strs: Vec<String> = self.prongs.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", strs.join(","))
        }
    }
}

/// Adjacency lists of G_{n,k}: vertex v joined to the k cyclically
/// farthest vertices, i.e. to v + j mod n for r <= j <= n - r with
/// r = (n-k+1)/2.
pub fn gnk_graph(n: u64, k: u64) -> Result<Vec<Vec<usize>>, FamilyError> {
    let fam = NonorFamily::new(n, k)?;
    let r = fam.r_half();
    let n = n as usize;
    let mut adj = vec![Vec::new(); n];
    for (v, list) in adj.iter_mut().enumerate() {
        for j in r..=(n as u64 - r) {
            list.push((v + j as usize) % n);
        }
        list.sort_unstable();
        list.dedup();
    }
    Ok(adj)
}

/// Surface invariants of Sigma_{n,k}: chi = -n, gcd(n,k) boundary
/// components, nonorientable genus n - gcd(n,k) + 2.
pub fn sigma_nk_info(n: u64, k: u64) -> Result<SurfaceInfo, FamilyError> {
    NonorFamily::new(n, k)?;
    let b = n.gcd(&k);
    Ok(SurfaceInfo::new(-(n as i64), b, n - b + 2, false))
}

/// Defining polynomial of f_{n,k}:
/// x^n - x^{n-r} - x^{n-r-1} - ... - x^{r+1} - x^r - 1 with r = (n-k+1)/2.
pub fn fnk_polynomial(n: u64, k: u64) -> Result<IntPolynomial, FamilyError> {
    let fam = NonorFamily::new(n, k)?;
    let r = fam.r_half() as usize;
    let n = n as usize;
    let mut coeffs = vec![BigInt::from(0); n + 1];
    coeffs[n] = BigInt::one();
    coeffs[0] = BigInt::from(-1);
    for c in coeffs.iter_mut().take(n - r + 1).skip(r) {
        *c = BigInt::from(-1);
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// The 2n interval labels around the boundary disk in cyclic order:
/// 1, s, 2, s+1, ..., n, s+n-1 (zero-based here), each label twice.
fn label_slots(n: u64, s: u64) -> Vec<usize> {
    let n = n as usize;
    let s = s as usize;
    let mut slots = Vec::with_capacity(2 * n);
    for i in 0..n {
        slots.push(i);
        slots.push((s - 1 + i) % n);
    }
    slots
}

/// Two labels link when one label's pair of boundary intervals separates
/// the other's in the cyclic order; the corresponding curves are disjoint
/// exactly in that case.
fn labels_link(positions: &[(usize, usize)], a: usize, b: usize) -> bool {
    let (a1, a2) = positions[a];
    let inside = |x: usize| a1 < x && x < a2;
    let (b1, b2) = positions[b];
    inside(b1) != inside(b2)
}

/// Intersection matrix i(C, C) of the curve system of f_{n,k}: entry 1
/// iff the labels do NOT link.
pub fn fnk_intersection_matrix(n: u64, k: u64) -> Result<IntMatrix, FamilyError> {
    let fam = NonorFamily::new(n, k)?;
    let slots = label_slots(n, fam.s());
    let nn = n as usize;
    let mut positions = vec![(usize::MAX, usize::MAX); nn];
    for (pos, &label) in slots.iter().enumerate() {
        if positions[label].0 == usize::MAX {
            positions[label].0 = pos;
        } else {
            positions[label].1 = pos;
        }
    }
    let mut m = IntMatrix::zero(nn);
    for a in 0..nn {
        for b in 0..nn {
            if a != b && !labels_link(&positions, a, b) {
                *m.get_mut(a, b) = BigInt::one();
            }
        }
    }
    Ok(m)
}

/// Action matrix of f_{n,k} on the cone of measures: M = R (I + E), where
/// R is the one-click rotation and E keeps only the first row of the
/// intersection matrix. Its characteristic polynomial is the defining
/// polynomial.
pub fn fnk_matrix(n: u64, k: u64) -> Result<IntMatrix, FamilyError> {
    let inter = fnk_intersection_matrix(n, k)?;
    Ok(rotation_times_identity_plus_first_row(&inter))
}

fn rotation_times_identity_plus_first_row(inter: &IntMatrix) -> IntMatrix {
    let n = inter.dim();
    let mut m = IntMatrix::zero(n);
    for i in 0..n - 1 {
        *m.get_mut(i, i + 1) = BigInt::one();
    }
    *m.get_mut(n - 1, 0) = BigInt::one();
    for j in 0..n {
        *m.get_mut(n - 1, j) += inter.get(0, j);
    }
    m
}

/// Singularity data of f_{n,k}: gcd(n,k) singularities, each with
/// 2n / gcd(n,k) prongs.
pub fn fnk_singularities(n: u64, k: u64) -> Result<SingularityType, FamilyError> {
    NonorFamily::new(n, k)?;
    let g = n.gcd(&k);
    Ok(SingularityType::new(vec![2 * n / g; g as usize]))
}

/// Defining polynomial of psi_k: x^{2k} - x^{k+1} - x^{k-1} - 1.
pub fn psik_polynomial(k: u64) -> Result<IntPolynomial, FamilyError> {
    ReversingFamily::new(k)?;
    let k = k as usize;
    let mut coeffs = vec![BigInt::from(0); 2 * k + 1];
    coeffs[2 * k] = BigInt::one();
    coeffs[k + 1] = BigInt::from(-1);
    coeffs[k - 1] = BigInt::from(-1);
    coeffs[0] = BigInt::from(-1);
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Intersection matrix of the 2k-cycle of annulus cores in the rotated
/// numbering: c_1 intersects c_k and c_{k+2}.
pub fn psik_intersection_matrix(k: u64) -> Result<IntMatrix, FamilyError> {
    ReversingFamily::new(k)?;
    let n = 2 * k as usize;
    let k = k as usize;
    let mut m = IntMatrix::zero(n);
    for i in 0..n {
        for off in [k - 1, k + 1] {
            *m.get_mut(i, (i + off) % n) = BigInt::one();
        }
    }
    Ok(m)
}

/// Action matrix of psi_k, same M = R (I + E) shape as for f_{n,k}.
pub fn psik_matrix(k: u64) -> Result<IntMatrix, FamilyError> {
    let inter = psik_intersection_matrix(k)?;
    Ok(rotation_times_identity_plus_first_row(&inter))
}

/// Surface invariants and singularity data of psi_k. For even k the map
/// has four k-pronged singularities, except that k = 2 produces
/// two-pronged regular points, i.e. no singularities at all. The paper
/// gives no singularity data for odd k, so none is emitted.
pub fn psik_info(k: u64) -> Result<(SurfaceInfo, Option<SingularityType>), FamilyError> {
    if k < 2 {
        return Err(FamilyError::OddK(k));
    }
    let chi = -2 * k as i64;
    let (boundary, singularities) = if k % 2 == 0 {
        let sing = if k == 2 {
            SingularityType::default()
        } else {
            SingularityType::new(vec![k; 4])
        };
        (4u64, Some(sing))
    } else {
        (2u64, None)
    };
    let genus = k + 1 - boundary / 2;
    Ok((SurfaceInfo::new(chi, boundary, genus, true), singularities))
}

/// Which family a table row belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Nonorientable { n: u64, k: u64 },
    Reversing { k: u64 },
}

/// One row of the per-genus best-example tables.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub genus: u64,
    pub params: FamilyParams,
    pub polynomial: IntPolynomial,
    pub perron: f64,
    /// Cyclotomic- and unit-root-free part carrying the stretch factor.
    pub minimal_part: IntPolynomial,
    pub cyclotomic_factors: Vec<usize>,
    pub singularities: Option<SingularityType>,
}

fn perron_of(poly: &IntPolynomial) -> f64 {
    match newton_descent(poly, &Margins::default()) {
        NewtonDescent::Converged(l) => l,
        other => panic!("defining polynomial must have a Perron root, got {other:?}"),
    }
}

fn stripped_part(poly: &IntPolynomial) -> (IntPolynomial, Vec<usize>) {
    let (no_units, _) = poly.strip_unit_roots();
    strip_cyclotomic(&no_units)
}

/// The family member of minimal stretch factor in a given genus.
///
/// Nonorientable: all filling (n, k) with n - gcd(n,k) + 2 = g lie in
/// g-1 <= n <= 2g-4 (gcd(n,k) divides n and is at most n/2 unless it is
/// 1, which forces n = g-1); the row reports the member minimizing the
/// largest root. Reversing: the unique psi_k member with k = g + 1.
pub fn best_in_family(genus: u64, reversing: bool) -> Result<TableRow, FamilyError> {
    if reversing {
        if genus % 2 == 0 {
            return Err(FamilyError::NoFamilyMember(genus));
        }
        let k = genus + 1;
        let poly = psik_polynomial(k)?;
        let (minimal_part, cyclotomic_factors) = stripped_part(&poly);
        let (_, singularities) = psik_info(k)?;
        return Ok(TableRow {
            genus,
            params: FamilyParams::Reversing { k },
            perron: perron_of(&poly),
            minimal_part,
            cyclotomic_factors,
            singularities,
            polynomial: poly,
        });
    }

    if genus < 4 {
        return Err(FamilyError::NoFamilyMember(genus));
    }
    let mut best: Option<TableRow> = None;
    for n in (genus - 1)..=(2 * genus - 4) {
        let gcd_target = n + 2 - genus;
        for k in 2..n {
            if n % 2 == k % 2 || n.gcd(&k) != gcd_target {
                continue;
            }
            let fam = NonorFamily::new(n, k)?;
            if !fam.is_filling() {
                continue;
            }
            let poly = fnk_polynomial(n, k)?;
            let perron = perron_of(&poly);
            let better = match &best {
                Some(row) => perron < row.perron,
                None => true,
            };
            if better {
                let (minimal_part, cyclotomic_factors) = stripped_part(&poly);
                best = Some(TableRow {
                    genus,
                    params: FamilyParams::Nonorientable { n, k },
                    polynomial: poly,
                    perron,
                    minimal_part,
                    cyclotomic_factors,
                    singularities: Some(fnk_singularities(n, k)?),
                });
            }
        }
    }
    best.ok_or(FamilyError::NoFamilyMember(genus))
}

/// Best-example rows for every genus up to `genus_max` where a family
/// member exists.
pub fn family_table(reversing: bool, genus_max: u64) -> Vec<TableRow> {
    let range: Vec<u64> = if reversing {
        (1..=genus_max).filter(|g| g % 2 == 1).collect()
    } else {
        (4..=genus_max).collect()
    };
    range
        .into_iter()
        .filter_map(|g| best_in_family(g, reversing).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnk_graph_examples() {
        // (3,2) is the triangle.
        let adj = gnk_graph(3, 2).unwrap();
        assert_eq!(adj, vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        // (9,2): each vertex adjacent to the two antipodal-most vertices.
        let adj = gnk_graph(9, 2).unwrap();
        assert_eq!(adj[0], vec![4, 5]);
        assert!(adj.iter().all(|l| l.len() == 2));
        // (10,5): 5-regular.
        let adj = gnk_graph(10, 5).unwrap();
        assert!(adj.iter().all(|l| l.len() == 5));
        assert_eq!(adj[0], vec![3, 4, 5, 6, 7]);
        // Edge count nk/2 for a few members.
        for (n, k) in [(9u64, 2u64), (10, 5), (12, 3), (6, 3)] {
            let adj = gnk_graph(n, k).unwrap();
            let edges: usize = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
            assert_eq!(edges as u64, n * k / 2);
        }
    }

    #[test]
    fn surface_info_examples() {
        let s = sigma_nk_info(10, 5).unwrap();
        assert_eq!(
            (s.euler_characteristic, s.boundary_components, s.genus),
            (-10, 5, 7)
        );
        let s = sigma_nk_info(3, 2).unwrap();
        assert_eq!(
            (s.euler_characteristic, s.boundary_components, s.genus),
            (-3, 1, 4)
        );
        let s = sigma_nk_info(12, 3).unwrap();
        assert_eq!(
            (s.euler_characteristic, s.boundary_components, s.genus),
            (-12, 3, 11)
        );
    }

    #[test]
    fn fnk_polynomial_examples() {
        assert_eq!(
            fnk_polynomial(3, 2).unwrap(),
            IntPolynomial::from_i64s(&[-1, -1, -1, 1])
        );
        assert_eq!(
            fnk_polynomial(9, 2).unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, 0, 0, -1, -1, 0, 0, 0, 1])
        );
        assert_eq!(
            fnk_polynomial(10, 5).unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1])
        );
    }

    #[test]
    fn fnk_matrix_matches_paper() {
        // The 10x10 matrix displayed for f_{10,5}: shift rows plus
        // bottom row 1 0 0 1 1 1 1 1 0 0.
        let m = fnk_matrix(10, 5).unwrap();
        for i in 0..9 {
            let mut row = vec![0i64; 10];
            row[i + 1] = 1;
            assert_eq!(m.row_i64(i), row, "row {i}");
        }
        assert_eq!(m.row_i64(9), vec![1, 0, 0, 1, 1, 1, 1, 1, 0, 0]);
        assert_eq!(m.charpoly(), fnk_polynomial(10, 5).unwrap());

        // (3,2) gives the companion of x^3 - x^2 - x - 1.
        let m = fnk_matrix(3, 2).unwrap();
        assert_eq!(m.charpoly(), fnk_polynomial(3, 2).unwrap());
    }

    #[test]
    fn charpoly_equals_defining_polynomial_up_to_20() {
        for n in 3..=20u64 {
            for k in 1..n {
                if n % 2 == k % 2 {
                    continue;
                }
                let m = fnk_matrix(n, k).unwrap();
                assert_eq!(
                    m.charpoly(),
                    fnk_polynomial(n, k).unwrap(),
                    "mismatch at (n,k)=({n},{k})"
                );
            }
        }
    }

    #[test]
    fn fnk_singularity_examples() {
        assert_eq!(
            fnk_singularities(6, 3).unwrap(),
            SingularityType::new(vec![4, 4, 4])
        );
        assert_eq!(
            fnk_singularities(22, 11).unwrap(),
            SingularityType::new(vec![4; 11])
        );
        assert_eq!(
            fnk_singularities(7, 2).unwrap(),
            SingularityType::new(vec![14])
        );
        assert_eq!(
            NonorFamily::new(6, 3).unwrap().polygon_path_length(),
            8
        );
    }

    #[test]
    fn psik_examples() {
        assert_eq!(
            psik_polynomial(4).unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, 0, -1, 0, -1, 0, 0, 1])
        );
        // k=2 strips down to x^2 - x - 1.
        let p = psik_polynomial(2).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[-1, -1, 0, -1, 1]));
        let (stripped, factors) = stripped_part(&p);
        assert_eq!(stripped, IntPolynomial::from_i64s(&[-1, -1, 1]));
        assert_eq!(factors, vec![4]);

        // The displayed 8x8 matrices for k=4.
        let inter = psik_intersection_matrix(4).unwrap();
        let expected = [
            [0, 0, 0, 1, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 1],
            [1, 0, 0, 0, 0, 0, 1, 0],
            [0, 1, 0, 0, 0, 0, 0, 1],
            [1, 0, 1, 0, 0, 0, 0, 0],
            [0, 1, 0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, 1, 0, 0, 0],
        ];
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(inter.row_i64(i), row.to_vec(), "i(C,C) row {i}");
        }
        let m = psik_matrix(4).unwrap();
        assert_eq!(m.row_i64(7), vec![1, 0, 0, 1, 0, 1, 0, 0]);
        assert_eq!(m.charpoly(), psik_polynomial(4).unwrap());

        for k in (2..=12u64).step_by(2) {
            assert_eq!(
                psik_matrix(k).unwrap().charpoly(),
                psik_polynomial(k).unwrap(),
                "mismatch at k={k}"
            );
        }
    }

    #[test]
    fn psik_info_examples() {
        let (s, sing) = psik_info(4).unwrap();
        assert_eq!(s.genus, 3);
        assert_eq!(sing.unwrap(), SingularityType::new(vec![4, 4, 4, 4]));
        let (s, sing) = psik_info(2).unwrap();
        assert_eq!(s.genus, 1);
        assert!(sing.unwrap().prongs.is_empty());
        let (s, sing) = psik_info(10).unwrap();
        assert_eq!(s.genus, 9);
        assert_eq!(sing.unwrap(), SingularityType::new(vec![10; 4]));
        // Odd k: surface only.
        let (s, sing) = psik_info(3).unwrap();
        assert_eq!((s.genus, s.boundary_components), (3, 2));
        assert!(sing.is_none());
    }

    #[test]
    fn best_in_family_examples() {
        let row = best_in_family(7, false).unwrap();
        assert_eq!(row.params, FamilyParams::Nonorientable { n: 10, k: 5 });
        assert!((row.perron - 1.42198).abs() < 1e-5);
        assert_eq!(
            row.singularities.unwrap(),
            SingularityType::new(vec![4, 4, 4, 4, 4])
        );

        let row = best_in_family(13, false).unwrap();
        assert_eq!(row.params, FamilyParams::Nonorientable { n: 22, k: 11 });
        assert!((row.perron - 1.27635).abs() < 1e-5);

        let row = best_in_family(16, false).unwrap();
        assert_eq!(row.params, FamilyParams::Nonorientable { n: 15, k: 2 });
        let mut want = vec![0i64; 16];
        want[0] = -1;
        want[7] = -1;
        want[8] = -1;
        want[15] = 1;
        assert_eq!(row.polynomial, IntPolynomial::from_i64s(&want));
        assert!((row.perron - 1.12488).abs() < 1e-5);
    }

    #[test]
    fn euler_poincare_closure() {
        // Closed nonorientable carrier: sum(prongs - 2) = 2g - 4.
        for n in 3..=24u64 {
            for k in 1..n {
                if n % 2 == k % 2 {
                    continue;
                }
                let info = sigma_nk_info(n, k).unwrap();
                let sing = fnk_singularities(n, k).unwrap();
                assert_eq!(
                    sing.prong_defect_sum(),
                    2 * info.genus as i64 - 4,
                    "(n,k)=({n},{k})"
                );
            }
        }
        // Closed orientable carrier S_{k-1} for even k > 2:
        // sum(prongs - 2) = 4(k - 2) = 4g - 4.
        for k in (4..=12u64).step_by(2) {
            let (info, sing) = psik_info(k).unwrap();
            assert_eq!(
                sing.unwrap().prong_defect_sum(),
                4 * (info.genus as i64) - 4
            );
        }
    }
}
