//! `|F_x ∩ F_y| = 2`. Labels: `c(xa) = 1`, `c(xb) = 2`, `F_y = {1, 2, 3}`,
//! candidates 4, 5, 6.

use super::{step, Engine, ExtensionContext, Step};
use crate::error::Result;
use crate::moves::ConfigurationA;
use crate::paths::classify;

pub(crate) fn case_2_1(eng: &mut Engine<'_>, ctx: &ExtensionContext) -> Result<Step> {
    let l = |k| ctx.col(k);
    let (x, a, b) = (ctx.x, ctx.a, ctx.b);
    let cls = classify(eng.g, eng.c, x, eng.y)?;
    let swap_x = ConfigurationA::new(x, a, b, vec![], vec![]);

    if !cls.strong().is_empty() {
        // swapping the two edges at x breaks every critical path: S_xa and
        // S_xb avoid 1 and 2
        step!(eng.exchange(&swap_x, "case2.1/strong-swap"));
        return Err(eng.fail("case2.1/strong-swap", "strong color still blocked"));
    }

    let active = cls.active_at(a);
    eng.expect(
        active.contains(l(4)) && active.contains(l(5)),
        "case2.1/labels",
        "colors 4 and 5 active at a",
    )?;
    let k1 = eng.via(a, l(4))?;
    let k2 = eng.via(a, l(5))?;
    let k3 = eng.via(a, l(6))?;

    step!(eng.exchange(&swap_x, "case2.1/swap-at-x"));
    // xa now has color 2; 3 is missing at a and at x
    let xa = eng.edge(x, a)?;
    step!(eng.recolor(xa, l(3), "case2.1/recolor-xa"));

    let s123 = ctx.set(&[1, 2, 3]);
    eng.expect(
        eng.s(a, k1)? == s123 && eng.s(a, k2)? == s123,
        "case2.1/s-sets",
        "S_ak1 = S_ak2 = {1,2,3}",
    )?;
    let cfg = ConfigurationA::new(a, k1, k2, vec![k3], vec![x]);
    step!(eng.exchange(&cfg, "case2.1/swap-at-a"));
    Err(eng.fail("case2.1/swap-at-a", "no candidate became valid"))
}

pub(crate) fn case_2_2(eng: &mut Engine<'_>, ctx: &ExtensionContext) -> Result<Step> {
    let l = |k| ctx.col(k);
    let (x, y, a, b) = (ctx.x, ctx.y, ctx.a, ctx.b);
    let cls = classify(eng.g, eng.c, x, y)?;
    let xa = eng.edge(x, a)?;
    let xb = eng.edge(x, b)?;

    eng.expect(
        eng.critical(l(2), l(5), x, y)?,
        "case2.2/labels",
        "a (2,5) critical path",
    )?;

    if cls.strong().contains(l(4)) {
        // 5 is missing at a, so xa can take it; then 1 is free for xb
        step!(eng.recolor(xa, l(5), "case2.2/strong"));
        eng.expect(
            eng.s(x, b)? == ctx.set(&[4, 5, 6]),
            "case2.2/strong",
            "S_xb = {4,5,6}",
        )?;
        step!(eng.recolor(xb, l(1), "case2.2/strong"));
        return Err(eng.fail("case2.2/strong", "no candidate became valid"));
    }

    let mut others = [l(4), l(6)];
    others.sort();
    for beta in others {
        if !eng.critical(l(2), beta, x, y)? {
            step!(eng.recolor(xa, l(5), "case2.2/inactive"));
            return Err(eng.fail("case2.2/inactive", "no candidate became valid"));
        }
    }

    let s456 = ctx.set(&[4, 5, 6]);
    eng.expect(
        eng.s(x, b)? == s456 && eng.s(y, ctx.b2)? == s456,
        "case2.2/s-sets",
        "S_xb = S_yb' = {4,5,6}",
    )?;
    step!(eng.recolor(xb, l(3), "case2.2/recolor-xb"));
    eng.expect(
        eng.s(y, ctx.d2)? == s456,
        "case2.2/s-sets",
        "S_yd' = {4,5,6}",
    )?;
    let cfg = ConfigurationA::new(y, ctx.b2, ctx.d2, vec![ctx.a2], vec![]);
    step!(eng.exchange(&cfg, "case2.2/swap-at-y"));
    Err(eng.fail("case2.2/swap-at-y", "no candidate became valid"))
}
