use super::functor::FinFunctor;

/// Outcome of the Grothendieck-fibration check. When the functor is a
/// fibration, `lifts` records one cartesian lift per (morphism into a fibre,
/// object over its target); otherwise `failure` names the first pair without
/// a cartesian lift.
#[derive(Clone, Debug)]
pub struct FibrationReport {
    pub is_fibration: bool,
    /// ((g, x), h): h is a cartesian lift of g with target x
    pub lifts: Vec<((usize, usize), usize)>,
    pub failure: Option<(usize, usize)>,
}

/// Check that every morphism g : b -> u(x) of the codomain admits a cartesian
/// lift with target x. Cartesianness is checked against the full universal
/// property by enumerating all factorization triangles.
pub fn is_grothendieck_fibration(u: &FinFunctor) -> FibrationReport {
    let dom = u.dom();
    let cod = u.cod();
    let mut lifts = Vec::new();
    for x in 0..dom.n_objects() {
        for g in 0..cod.n_morphisms() {
            if cod.tgt(g) != u.on_obj(x) {
                continue;
            }
            let candidates: Vec<usize> = (0..dom.n_morphisms())
                .filter(|&h| dom.tgt(h) == x && u.on_mor(h) == g)
                .collect();
            let cartesian = candidates.into_iter().find(|&h| is_cartesian(u, h));
            match cartesian {
                Some(h) => lifts.push(((g, x), h)),
                None => {
                    return FibrationReport { is_fibration: false, lifts, failure: Some((g, x)) }
                }
            }
        }
    }
    FibrationReport { is_fibration: true, lifts, failure: None }
}

/// h : y -> x is cartesian over u(h) when every h' : z -> x factors uniquely
/// through h over any factorization of u(h') through u(h).
fn is_cartesian(u: &FinFunctor, h: usize) -> bool {
    let dom = u.dom();
    let cod = u.cod();
    let x = dom.tgt(h);
    let y = dom.src(h);
    let g = u.on_mor(h);
    for hp in 0..dom.n_morphisms() {
        if dom.tgt(hp) != x {
            continue;
        }
        let z = dom.src(hp);
        for w in 0..cod.n_morphisms() {
            if cod.src(w) != u.on_obj(z) || cod.tgt(w) != cod.src(g) {
                continue;
            }
            if cod.compose(g, w) != Some(u.on_mor(hp)) {
                continue;
            }
            let mut solutions = 0;
            for t in 0..dom.n_morphisms() {
                if dom.src(t) == z
                    && dom.tgt(t) == y
                    && u.on_mor(t) == w
                    && dom.compose(h, t) == Some(hp)
                {
                    solutions += 1;
                }
            }
            if solutions != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::build::{delta, product, terminal};
    use crate::fincat::functor::FinFunctor;

    #[test]
    fn identity_is_a_fibration() {
        let d2 = delta(2);
        let r = is_grothendieck_fibration(&FinFunctor::identity(d2));
        assert!(r.is_fibration);
    }

    #[test]
    fn product_projection_is_a_fibration() {
        let a = delta(1);
        let b = delta(1);
        let p = product(&a, &b);
        let ps = p.product_structure().unwrap().clone();
        let omap: Vec<usize> = ps.obj_pairs.iter().map(|&(l, _)| l).collect();
        let mmap: Vec<usize> = ps.mor_pairs.iter().map(|&(l, _)| l).collect();
        let proj = FinFunctor::new(p.clone(), a.clone(), omap, mmap).unwrap();
        assert!(is_grothendieck_fibration(&proj).is_fibration);
    }

    #[test]
    fn point_at_top_of_delta1_is_not_a_fibration() {
        let e = terminal();
        let d1 = delta(1);
        let sel = FinFunctor::new(e.clone(), d1.clone(), vec![1], vec![d1.identity_of(1)]).unwrap();
        let r = is_grothendieck_fibration(&sel);
        assert!(!r.is_fibration);
        let (g, _) = r.failure.unwrap();
        assert_eq!(d1.morphism_id(g), "d0_1");
    }
}
