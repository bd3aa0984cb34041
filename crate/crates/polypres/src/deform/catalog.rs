use crate::perm::TableGroup;
use crate::Error;

/// Largest order covered by the built-in catalog.
pub const CATALOG_LIMIT: usize = 16;

/// `⟨x, y | x^m = 1, y^n = x^s, y x y⁻¹ = x^r⟩` on the elements `x^i y^j`.
pub fn metacyclic(name: &str, m: usize, n: usize, r: usize, s: usize) -> TableGroup {
    let size = m * n;
    // r^j mod m
    let mut rp = vec![1usize; n + 1];
    for j in 1..=n {
        rp[j] = rp[j - 1] * r % m;
    }
    let mut mul = vec![0u32; size * size];
    for a in 0..size {
        let (i1, j1) = (a / n, a % n);
        for b in 0..size {
            let (i2, j2) = (b / n, b % n);
            let mut i = (i1 + i2 * rp[j1]) % m;
            let mut j = j1 + j2;
            if j >= n {
                j -= n;
                i = (i + s) % m;
            }
            mul[a * size + b] = (i * n + j) as u32;
        }
    }
    TableGroup::from_table(name, size, mul).expect("metacyclic parameters define a group")
}

pub fn cyclic(n: usize) -> TableGroup {
    metacyclic(&format!("C{n}"), n, 1, 1, 0)
}

pub fn dihedral(n: usize) -> TableGroup {
    let name = if n == 6 { "S3".to_string() } else { format!("D{n}") };
    metacyclic(&name, n / 2, 2, n / 2 - 1, 0)
}

/// Direct product, elements `(a, b)` numbered `a·|H| + b`.
pub fn direct_product(name: &str, g: &TableGroup, h: &TableGroup) -> TableGroup {
    let (n, m) = (g.order(), h.order());
    let size = n * m;
    let mut mul = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            mul[x * size + y] = (g.mul(x / m, y / m) * m + h.mul(x % m, y % m)) as u32;
        }
    }
    TableGroup::from_table(name, size, mul).expect("direct product is a group")
}

/// Semidirect product `N ⋊ K` where `theta[k]` is the automorphism of `N`
/// (as an element map) by which `k` acts.
pub fn semidirect(name: &str, n: &TableGroup, k: &TableGroup, theta: &[Vec<usize>]) -> Result<TableGroup, Error> {
    let (a, b) = (n.order(), k.order());
    let size = a * b;
    let mut mul = vec![0u32; size * size];
    for x in 0..size {
        let (n1, k1) = (x / b, x % b);
        for y in 0..size {
            let (n2, k2) = (y / b, y % b);
            mul[x * size + y] = (n.mul(n1, theta[k1][n2]) * b + k.mul(k1, k2)) as u32;
        }
    }
    TableGroup::from_table(name, size, mul)
}

/// Powers of an automorphism `t` of `N` of order dividing `|K|`, for `K` cyclic.
fn cyclic_action(n: &TableGroup, t: &[usize], order: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n.order()).collect::<Vec<_>>()];
    for i in 1..order {
        let prev = &out[i - 1];
        out.push(prev.iter().map(|&x| t[x]).collect());
    }
    out
}

/// Automorphism of a product `C_m × C_2`, given on generators `(1,0) ↦ img_a`, `(0,1) ↦ img_b`.
fn aut_c4xc2(g: &TableGroup, img_a: usize, img_b: usize) -> Vec<usize> {
    // element (i, j) = a^i b^j with index 2i + j
    (0..g.order())
        .map(|x| {
            let (i, j) = (x / 2, x % 2);
            g.mul(g.pow(img_a, i as i64), g.pow(img_b, j as i64))
        })
        .collect()
}

/// All groups of order `n ≤ 16` up to isomorphism.
pub fn groups_of_order(n: usize) -> Result<Vec<TableGroup>, Error> {
    if n == 0 || n > CATALOG_LIMIT {
        return Err(Error::TooLarge(format!("catalog covers orders 1..={CATALOG_LIMIT}")));
    }
    let c = cyclic;
    let dp = direct_product;
    let out = match n {
        1 => vec![metacyclic("C1", 1, 1, 0, 0)],
        4 => vec![c(4), dp("C2xC2", &c(2), &c(2))],
        6 => vec![c(6), dihedral(6)],
        8 => vec![
            c(8),
            dp("C4xC2", &c(4), &c(2)),
            dp("C2xC2xC2", &dp("C2xC2", &c(2), &c(2)), &c(2)),
            dihedral(8),
            metacyclic("Q8", 4, 2, 3, 2),
        ],
        9 => vec![c(9), dp("C3xC3", &c(3), &c(3))],
        10 | 14 => vec![c(n), dihedral(n)],
        12 => {
            let v4 = dp("C2xC2", &c(2), &c(2));
            // (i,j) ↦ cyclic shift of the three involutions
            let t = vec![0, 2, 3, 1];
            vec![
                c(12),
                dp("C2xC6", &c(2), &c(6)),
                dihedral(12),
                semidirect("A4", &v4, &c(3), &cyclic_action(&v4, &t, 3))?,
                metacyclic("Dic12", 6, 2, 5, 3),
            ]
        }
        16 => {
            let c4c2 = dp("C4xC2", &c(4), &c(2));
            let a = 2; // (1,0)
            let b = 1; // (0,1)
            let ab = c4c2.mul(a, b);
            let a2b = c4c2.mul(c4c2.pow(a, 2), b);
            let c2 = c(2);
            let d8 = dihedral(8);
            let q8 = metacyclic("Q8", 4, 2, 3, 2);
            vec![
                c(16),
                dp("C4xC4", &c(4), &c(4)),
                dp("C2xC8", &c(2), &c(8)),
                dp("C2xC2xC4", &dp("C2xC2", &c2, &c2), &c(4)),
                dp("C2^4", &dp("C2xC2", &c2, &c2), &dp("C2xC2", &c2, &c2)),
                dihedral(16),
                metacyclic("Q16", 8, 2, 7, 4),
                metacyclic("SD16", 8, 2, 3, 0),
                metacyclic("M16", 8, 2, 5, 0),
                metacyclic("C4:C4", 4, 4, 3, 0),
                semidirect("C2^2:C4", &c4c2, &c2, &cyclic_action(&c4c2, &aut_c4xc2(&c4c2, ab, b), 2))?,
                dp("C2xD8", &c2, &d8),
                dp("C2xQ8", &c2, &q8),
                semidirect("C4oD8", &c4c2, &c2, &cyclic_action(&c4c2, &aut_c4xc2(&c4c2, a, a2b), 2))?,
            ]
        }
        p => vec![c(p)],
    };
    Ok(out)
}

/// Number of isomorphism classes of groups of order `n ≤ 16`.
pub fn class_count(n: usize) -> usize {
    [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14][n]
}
