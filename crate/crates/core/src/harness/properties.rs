use super::{Case, Check, Stop, Val};
use crate::catalog;
use crate::homotopy::enumerate_maps;
use crate::map::ContinuousMap;
use crate::poset::{Product, Space};
use crate::whitehead::mapping_cylinder;

pub struct Property {
    pub id: &'static str,
    pub statement: &'static str,
    /// Needs no random input and runs once.
    pub deterministic: bool,
    pub(crate) run: fn(&mut Case) -> Check,
}

const fn prop(id: &'static str, statement: &'static str, run: fn(&mut Case) -> Check) -> Property {
    Property {
        id,
        statement,
        deterministic: false,
        run,
    }
}

pub static CATALOG: &[Property] = &[
    prop("s0-section", "secat(ι) = 0 iff ι has a homotopy section", s0_section),
    prop("s1-factorization", "κ ≃ ι∘ζ implies secat(ι) ≤ secat(κ)", s1_factorization),
    prop("secat-times-identity", "secat(ι × id_Z) = secat(ι)", secat_times_identity),
    prop("liftcat-product", "liftcat_{f×κ}(ι × id_Z) = liftcat_f(ι)", liftcat_product),
    prop("liftcat-homotopy-invariance", "f ≃ f', ι ≃ ι' imply liftcat_f(ι) = liftcat_f'(ι')", liftcat_homotopy_invariance),
    prop("liftcat-le-secat", "liftcat_f(ι) ≤ secat(ι)", liftcat_le_secat),
    prop("liftcat-composition", "liftcat_{f∘g}(ι) ≤ liftcat_f(ι) ≤ secat(ι)", liftcat_composition),
    prop("distance-separation", "D(f,g) = 0 iff f ≃ g", distance_separation),
    prop("distance-symmetry", "D(f,g) = D(g,f)", distance_symmetry),
    prop("distance-right-composition", "D(f∘h, g∘h) ≤ D(f,g)", distance_right_composition),
    prop("distance-left-composition", "D(h∘f, h∘g) ≤ D(f,g)", distance_left_composition),
    prop("distance-product-swap", "D(f×f', g×g') = D(f×g', g×f')", distance_product_swap),
    prop("distance-times-map", "D(f×h, g×h) = D(f,g)", distance_times_map),
    prop("distance-as-liftcat", "D(f,g) = liftcat_{(id,f)}((id,g))", distance_as_liftcat),
    prop("distance-lower-bound", "D(f,g) ≥ max(liftcat_f(g), liftcat_g(f))", distance_lower_bound),
    prop("triangle-inequality", "X normal: D(f,h) ≤ D(f,g) + D(g,h)", triangle_inequality),
    prop("distance-composition-sum", "X normal: D(f'∘f, g'∘g) ≤ D(f,g) + D(f',g')", distance_composition_sum),
    prop("distance-product-sum", "X×X' normal: D(f×f', g×g') ≤ D(f,g) + D(f',g')", distance_product_sum),
    prop("tc-product", "(A×A)×(B×B) normal: TC(A×B) ≤ TC(A) + TC(B)", tc_product),
    prop("secat-le-cat", "secat(α) ≤ cat(Y), with equality for nullhomotopic α", secat_le_cat),
    prop("liftcat-le-cat-secat", "liftcat_f(ι) ≤ min(cat(X), secat(ι))", liftcat_le_cat_secat),
    prop("cat-map-bound", "cat(f) ≤ min(cat(X), cat(Y))", cat_map_bound),
    prop("distance-le-cat-tc", "D(f,g) ≤ min(cat(X), TC(Y))", distance_le_cat_tc),
    prop("cat-tc-chain", "D(id, const) = cat(X) ≤ TC(X) ≤ cat(X×X)", cat_tc_chain),
    prop("distance-inclusions", "D(in1, in2) = cat(X)", distance_inclusions),
    prop("cat-product", "X×Y normal: cat(X×Y) ≤ cat(X) + cat(Y)", cat_product),
    prop(
        "pointed-nonzero",
        "X normal, path-connected, closed basepoint: free liftcat n > 0 implies pointed liftcat n",
        pointed_nonzero,
    ),
    prop(
        "pointed-zero",
        "X normal, path-connected, closed basepoint: free liftcat 0 implies pointed liftcat ≤ 1",
        pointed_zero,
    ),
    prop("pointed-dominates-free", "free liftcat ≤ pointed liftcat", pointed_dominates_free),
    prop("op-le-wg", "liftcat_op ≤ liftcat_WG, with equality on normal X", op_le_wg),
    prop("cylinder-replacement", "liftcat_f(ι) = liftcat_{j∘f}(μ) for the mapping cylinder of ι", cylinder_replacement),
    prop("distance-oracle", "cover distance = diagonal liftcat distance", distance_oracle),
    prop("tc-oracle", "TC(Y) = D(pr1, pr2)", tc_oracle),
    Property {
        id: "pseudocircle-regression",
        statement: "S is not normal and cat(S×S) = 3 > cat(S) + cat(S) = 2",
        deterministic: true,
        run: pseudocircle_regression,
    },
];

fn show(v: Val) -> String {
    v.map_or("inf".to_string(), |n| n.to_string())
}

fn le(a: Val, b: Val) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => a <= b,
    }
}

fn add(a: Val, b: Val) -> Val {
    Some(a? + b?)
}

fn min(a: Val, b: Val) -> Val {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Stop::Fail(msg()))
    }
}

fn expect_le(what: &str, a: Val, b: Val) -> Check {
    ensure(le(a, b), || format!("{what}: {} > {}", show(a), show(b)))
}

fn expect_eq(what: &str, a: Val, b: Val) -> Check {
    ensure(a == b, || format!("{what}: {} != {}", show(a), show(b)))
}

fn product(x: &Space, y: &Space) -> Check<Space> {
    Ok(Product::new(x, y)?.space)
}

fn s0_section(c: &mut Case) -> Check {
    let a = c.space()?;
    let y = c.space()?;
    let iota = c.map(&a, &y)?;
    let secat = c.secat(&iota)?;
    // section search over all s : Y → A, one homotopy test per distinct ι∘s
    let id = ContinuousMap::identity(&y);
    let mut seen = std::collections::HashSet::new();
    let mut section = false;
    for s in enumerate_maps(&y, &a, c.pointed, c.cfg.settings.budget.max_maps)? {
        let is = iota.after(&s)?;
        if seen.insert(is.values().to_vec()) && c.homotopic(&is, &id, false)? {
            section = true;
            break;
        }
    }
    ensure((secat == Some(0)) == section, || {
        format!("secat = {} but section search says {section}", show(secat))
    })
}

fn s1_factorization(c: &mut Case) -> Check {
    let b = c.space()?;
    let a = c.space()?;
    let y = c.space()?;
    let zeta = c.map(&b, &a)?;
    let iota = c.map(&a, &y)?;
    let kappa = c.walk(&iota.after(&zeta)?)?;
    let si = c.secat(&iota)?;
    let sk = c.secat(&kappa)?;
    expect_le("secat(ι) ≤ secat(κ)", si, sk)
}

fn secat_times_identity(c: &mut Case) -> Check {
    let a = c.space()?;
    let y = c.space()?;
    let z = c.space()?;
    let iota = c.map(&a, &y)?;
    let lhs = c.secat(&iota.times(&ContinuousMap::identity(&z))?)?;
    let rhs = c.secat(&iota)?;
    expect_eq("secat(ι × id) = secat(ι)", lhs, rhs)
}

fn liftcat_product(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    let b = c.space()?;
    let z = c.space()?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let kappa = c.map(&b, &z)?;
    let lhs = c.liftcat(&f.times(&kappa)?, &iota.times(&ContinuousMap::identity(&z))?)?;
    let rhs = c.liftcat(&f, &iota)?;
    expect_eq("liftcat_{f×κ}(ι × id) = liftcat_f(ι)", lhs, rhs)
}

fn liftcat_homotopy_invariance(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let f2 = c.walk(&f)?;
    let iota2 = c.walk(&iota)?;
    let l1 = c.liftcat(&f, &iota)?;
    let l2 = c.liftcat(&f2, &iota2)?;
    expect_eq("liftcat under homotopy", l1, l2)
}

fn liftcat_le_secat(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let l = c.liftcat(&f, &iota)?;
    let s = c.secat(&iota)?;
    expect_le("liftcat ≤ secat", l, s)
}

fn liftcat_composition(c: &mut Case) -> Check {
    let w = c.space()?;
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    let g = c.map(&w, &x)?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let lfg = c.liftcat(&f.after(&g)?, &iota)?;
    let lf = c.liftcat(&f, &iota)?;
    let s = c.secat(&iota)?;
    expect_le("liftcat_{f∘g} ≤ liftcat_f", lfg, lf)?;
    expect_le("liftcat_f ≤ secat", lf, s)
}

fn distance_separation(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let h = c.walk(&f)?;
    for other in [&g, &h] {
        let d = c.distance(&f, other)?;
        let same = c.homotopic(&f, other, false)?;
        ensure((d == Some(0)) == same, || {
            format!("D = {} but homotopic = {same}", show(d))
        })?;
    }
    Ok(())
}

fn distance_symmetry(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let a = c.distance(&f, &g)?;
    let b = c.distance(&g, &f)?;
    expect_eq("D(f,g) = D(g,f)", a, b)
}

fn distance_right_composition(c: &mut Case) -> Check {
    let w = c.space()?;
    let x = c.space()?;
    let y = c.space()?;
    let h = c.map(&w, &x)?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let lhs = c.distance(&f.after(&h)?, &g.after(&h)?)?;
    let rhs = c.distance(&f, &g)?;
    expect_le("D(f∘h, g∘h) ≤ D(f,g)", lhs, rhs)
}

fn distance_left_composition(c: &mut Case) -> Check {
    let w = c.space()?;
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&w, &x)?;
    let g = c.map(&w, &x)?;
    let h = c.map(&x, &y)?;
    let lhs = c.distance(&h.after(&f)?, &h.after(&g)?)?;
    let rhs = c.distance(&f, &g)?;
    expect_le("D(h∘f, h∘g) ≤ D(f,g)", lhs, rhs)
}

fn distance_product_swap(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let x2 = c.space()?;
    let y2 = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let f2 = c.map(&x2, &y2)?;
    let g2 = c.map(&x2, &y2)?;
    let lhs = c.distance(&f.times(&f2)?, &g.times(&g2)?)?;
    let rhs = c.distance(&f.times(&g2)?, &g.times(&f2)?)?;
    expect_eq("D(f×f', g×g') = D(f×g', g×f')", lhs, rhs)
}

fn distance_times_map(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let x2 = c.space()?;
    let y2 = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let h = c.map(&x2, &y2)?;
    let lhs = c.distance(&f.times(&h)?, &g.times(&h)?)?;
    let rhs = c.distance(&f, &g)?;
    expect_eq("D(f×h, g×h) = D(f,g)", lhs, rhs)
}

fn distance_as_liftcat(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let id = ContinuousMap::identity(&x);
    let d = c.distance(&f, &g)?;
    let l = c.liftcat(&id.whisker(&f)?, &id.whisker(&g)?)?;
    expect_eq("D(f,g) = liftcat_{(id,f)}((id,g))", d, l)
}

fn distance_lower_bound(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let d = c.distance(&f, &g)?;
    let lfg = c.liftcat(&f, &g)?;
    let lgf = c.liftcat(&g, &f)?;
    expect_le("liftcat_f(g) ≤ D(f,g)", lfg, d)?;
    expect_le("liftcat_g(f) ≤ D(f,g)", lgf, d)
}

fn triangle_inequality(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    c.need_normal(&x, "X")?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let h = c.map(&x, &y)?;
    let fh = c.distance(&f, &h)?;
    let fg = c.distance(&f, &g)?;
    let gh = c.distance(&g, &h)?;
    expect_le("D(f,h) ≤ D(f,g) + D(g,h)", fh, add(fg, gh))
}

fn distance_composition_sum(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let z = c.space()?;
    c.need_normal(&x, "X")?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let f2 = c.map(&y, &z)?;
    let g2 = c.map(&y, &z)?;
    let lhs = c.distance(&f2.after(&f)?, &g2.after(&g)?)?;
    let d1 = c.distance(&f, &g)?;
    let d2 = c.distance(&f2, &g2)?;
    expect_le("D(f'∘f, g'∘g) ≤ D(f,g) + D(f',g')", lhs, add(d1, d2))
}

fn distance_product_sum(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let x2 = c.space()?;
    let y2 = c.space()?;
    c.need_normal(&product(&x, &x2)?, "X×X'")?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let f2 = c.map(&x2, &y2)?;
    let g2 = c.map(&x2, &y2)?;
    let lhs = c.distance(&f.times(&f2)?, &g.times(&g2)?)?;
    let d1 = c.distance(&f, &g)?;
    let d2 = c.distance(&f2, &g2)?;
    expect_le("D(f×f', g×g') ≤ D(f,g) + D(f',g')", lhs, add(d1, d2))
}

fn tc_product(c: &mut Case) -> Check {
    let a = c.small_space()?;
    let b = c.small_space()?;
    c.need_normal(&product(&product(&a, &a)?, &product(&b, &b)?)?, "(A×A)×(B×B)")?;
    let lhs = c.tc(&product(&a, &b)?)?;
    let ta = c.tc(&a)?;
    let tb = c.tc(&b)?;
    expect_le("TC(A×B) ≤ TC(A) + TC(B)", lhs, add(ta, tb))
}

fn secat_le_cat(c: &mut Case) -> Check {
    let a = c.space()?;
    let y = c.space()?;
    c.need_connected(&y, "Y")?;
    let alpha = c.map(&a, &y)?;
    let cat = c.cat(&y)?;
    let s = c.secat(&alpha)?;
    expect_le("secat(α) ≤ cat(Y)", s, cat)?;
    if c.nullhomotopic(&alpha)? {
        expect_eq("secat(α) = cat(Y) for nullhomotopic α", s, cat)?;
    }
    let constant = c.constant(&a, &y);
    let s0 = c.secat(&constant)?;
    expect_eq("secat(const) = cat(Y)", s0, cat)
}

/// The bounds through `cat(X)` come from a homotopy commutative square
/// out of a point, which exists iff the images of `f` and `g` meet a
/// common path component of `Y` (automatic for pointed maps).
fn need_square(f: &ContinuousMap, g: &ContinuousMap) -> Check {
    let y = f.codomain();
    let (fi, gi) = (f.image(), g.image());
    if y.components().iter().any(|c| !c.intersection(&fi).is_empty() && !c.intersection(&gi).is_empty()) {
        Ok(())
    } else {
        Err(Stop::Reject("the images lie in different path components".into()))
    }
}

fn liftcat_le_cat_secat(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    c.need_connected(&x, "X")?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    need_square(&f, &iota)?;
    let l = c.liftcat(&f, &iota)?;
    let cat = c.cat(&x)?;
    let s = c.secat(&iota)?;
    expect_le("liftcat ≤ min(cat X, secat ι)", l, min(cat, s))
}

fn cat_map_bound(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    c.need_connected(&x, "X")?;
    c.need_connected(&y, "Y")?;
    let f = c.map(&x, &y)?;
    let cf = c.cat_map(&f)?;
    let cx = c.cat(&x)?;
    let cy = c.cat(&y)?;
    expect_le("cat(f) ≤ min(cat X, cat Y)", cf, min(cx, cy))
}

fn distance_le_cat_tc(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    c.need_connected(&x, "X")?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    need_square(&f, &g)?;
    let d = c.distance(&f, &g)?;
    let cat = c.cat(&x)?;
    let tc = c.tc(&y)?;
    expect_le("D(f,g) ≤ min(cat X, TC Y)", d, min(cat, tc))
}

fn cat_tc_chain(c: &mut Case) -> Check {
    let x = c.space()?;
    c.need_connected(&x, "X")?;
    let id = ContinuousMap::identity(&x);
    let d = c.distance(&id, &c.constant(&x, &x))?;
    let cat = c.cat(&x)?;
    let tc = c.tc(&x)?;
    let cat2 = c.cat(&product(&x, &x)?)?;
    expect_eq("D(id, const) = cat X", d, cat)?;
    expect_le("cat X ≤ TC X", cat, tc)?;
    expect_le("TC X ≤ cat(X×X)", tc, cat2)
}

fn distance_inclusions(c: &mut Case) -> Check {
    let x = c.space()?;
    c.need_connected(&x, "X")?;
    let id = ContinuousMap::identity(&x);
    let n = c.constant(&x, &x);
    let d = c.distance(&id.whisker(&n)?, &n.whisker(&id)?)?;
    let cat = c.cat(&x)?;
    expect_eq("D(in1, in2) = cat X", d, cat)
}

fn cat_product(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    c.need_connected(&x, "X")?;
    c.need_connected(&y, "Y")?;
    let xy = product(&x, &y)?;
    c.need_normal(&xy, "X×Y")?;
    let cxy = c.cat(&xy)?;
    let cx = c.cat(&x)?;
    let cy = c.cat(&y)?;
    expect_le("cat(X×Y) ≤ cat X + cat Y", cxy, add(cx, cy))
}

/// Free and pointed liftcat on pointed spaces with a normal, path-connected
/// domain.
fn pointed_pair(c: &mut Case, filtered: bool) -> Check<(Val, Val)> {
    let x = c.pointed_space()?;
    let y = c.pointed_space()?;
    let a = c.pointed_space()?;
    if filtered {
        c.need_normal(&x, "X")?;
        if !x.is_path_connected() {
            return Err(Stop::Reject("X is not path-connected".into()));
        }
    }
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let free = c.liftcat_in(false, &f, &iota)?;
    let pointed = c.liftcat_in(true, &f, &iota)?;
    Ok((free, pointed))
}

fn pointed_nonzero(c: &mut Case) -> Check {
    let (free, pointed) = pointed_pair(c, true)?;
    if free != Some(0) {
        expect_eq("pointed liftcat = free liftcat", pointed, free)?;
    }
    Ok(())
}

fn pointed_zero(c: &mut Case) -> Check {
    let (free, pointed) = pointed_pair(c, true)?;
    if free == Some(0) {
        expect_le("pointed liftcat ≤ 1", pointed, Some(1))?;
    }
    Ok(())
}

fn pointed_dominates_free(c: &mut Case) -> Check {
    let (free, pointed) = pointed_pair(c, false)?;
    expect_le("free ≤ pointed", free, pointed)
}

fn op_le_wg(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let iota = c.inclusion(&y)?;
    let op = c.liftcat_in(false, &f, &iota)?;
    let wg = c.wg(&f, &iota)?;
    expect_le("liftcat_op ≤ liftcat_WG", op, wg)?;
    if x.is_normal().0 {
        expect_eq("liftcat_op = liftcat_WG on normal X", op, wg)?;
    }
    Ok(())
}

fn cylinder_replacement(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let a = c.space()?;
    let f = c.map(&x, &y)?;
    let iota = c.map(&a, &y)?;
    let cyl = mapping_cylinder(&iota)?;
    let lhs = c.liftcat_in(false, &f, &iota)?;
    let rhs = c.liftcat_in(false, &cyl.j.after(&f)?, &cyl.mu)?;
    expect_eq("liftcat_f(ι) = liftcat_{j∘f}(μ)", lhs, rhs)
}

fn distance_oracle(c: &mut Case) -> Check {
    let x = c.space()?;
    let y = c.space()?;
    let f = c.map(&x, &y)?;
    let g = c.map(&x, &y)?;
    let d = c.distance(&f, &g)?;
    let direct = c.distance_direct(&f, &g)?;
    expect_eq("cover distance = diagonal distance", d, direct)
}

fn tc_oracle(c: &mut Case) -> Check {
    let y = c.tiny_space()?;
    let p = Product::new(&y, &y)?;
    let tc = c.tc_plain(&y)?;
    let d = c.distance(&p.pr1(), &p.pr2())?;
    expect_eq("TC(Y) = D(pr1, pr2)", tc, d)
}

fn pseudocircle_regression(c: &mut Case) -> Check {
    let s = catalog::pseudocircle();
    ensure(!s.is_normal().0, || "S reported normal".into())?;
    let pointed = c.pointed;
    c.pointed = false;
    let cat = c.cat(&s)?;
    let cat2 = c.cat(&catalog::pseudocircle_squared())?;
    c.pointed = pointed;
    expect_eq("cat S", cat, Some(1))?;
    expect_eq("cat(S×S)", cat2, Some(3))?;
    ensure(!le(cat2, add(cat, cat)), || "product inequality holds on S×S".into())
}
