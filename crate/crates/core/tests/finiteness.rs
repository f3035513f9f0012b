use enhanced_nilpotent::finiteness::{
    decide_enhanced, decide_gl_variety, normalize_det_twist, Finiteness, WeightSpec,
};

/// Every dominant weight with `n ≤ 6` and entries in `[−3, 3]`.
fn grid() -> Vec<WeightSpec> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let mut stack: Vec<Vec<i64>> = (-3..=3).map(|a| vec![a]).collect();
        while let Some(w) = stack.pop() {
            if w.len() == n {
                out.push(WeightSpec::new(n, w).unwrap());
                continue;
            }
            let last = *w.last().unwrap();
            for a in -3..=last {
                let mut next = w.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }
    out
}

#[test]
fn decisions_ignore_determinant_twist() {
    for w in grid() {
        let normal = normalize_det_twist(&w);
        assert_eq!(*normal.weight().last().unwrap(), 0);
        assert_eq!(decide_enhanced(&w), decide_enhanced(&normal), "{w}");
        assert_eq!(decide_gl_variety(&w), decide_gl_variety(&normal), "{w}");
    }
}

#[test]
fn group_orbits_refine_enhanced_orbits() {
    let mut disagreements = Vec::new();
    for w in grid() {
        if decide_enhanced(&w) == Finiteness::Infinite {
            assert_eq!(decide_gl_variety(&w), Finiteness::Infinite, "{w}");
        }
        if decide_enhanced(&w) != decide_gl_variety(&w) {
            disagreements.push(normalize_det_twist(&w).to_string());
        }
    }
    disagreements.sort();
    disagreements.dedup();
    assert_eq!(disagreements, vec!["(2,0)"]);
}
