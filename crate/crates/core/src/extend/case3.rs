//! `|F_x ∩ F_y| = 1`. Labels: `c(xa) = 1` is the common color, `c(xb) = 2`,
//! `F_y = {1, 3, 4}` with `b'` via 3 and `d'` via 4, candidates 5, 6.

use super::{step, Engine, ExtensionContext, Step};
use crate::color::Color;
use crate::error::Result;
use crate::moves::ConfigurationA;
use crate::paths::maximal_path;

pub(crate) fn case_3(eng: &mut Engine<'_>, ctx: &ExtensionContext) -> Result<Step> {
    let l = |k| ctx.col(k);
    let (x, y, a, b) = (ctx.x, ctx.y, ctx.a, ctx.b);
    let xa = eng.edge(x, a)?;
    let xb = eng.edge(x, b)?;

    // both candidates are blocked through color 1
    eng.expect(
        eng.critical(l(1), l(5), x, y)? && eng.critical(l(1), l(6), x, y)?,
        "case3/labels",
        "(1,5) and (1,6) critical paths",
    )?;

    // get 3 and 4 into S_xb; each recoloring here turns the instance into
    // case 2, or makes 2 valid
    let sxb = eng.s(x, b)?;
    let mut missing: Vec<Color> = [l(3), l(4)]
        .into_iter()
        .filter(|&r| !sxb.contains(r))
        .collect();
    missing.sort();
    for &r in &missing {
        if !eng.critical(l(1), r, x, b)? {
            step!(eng.recolor(xb, r, "case3/xb-free"));
            return Ok(Step::Reenter);
        }
    }
    if let Some(&r) = missing.first() {
        let gamma = ctx.set(&[3, 4, 5, 6]).without(r).difference(sxb);
        eng.expect(gamma.len() == 1, "case3/xb-gamma", "one color left for xb")?;
        let gamma = gamma.min().expect("nonempty");
        step!(eng.recolor(xb, gamma, "case3/xb-gamma"));
        return Ok(Step::Reenter);
    }

    // S_xb ⊇ {3,4}
    if !sxb.contains(l(1)) {
        let sxa = eng.s(x, a)?;
        let alpha = sxa.difference(ctx.set(&[5, 6]));
        eng.expect(alpha.len() == 1, "case3/xa-xb-pair", "S_xa = {α,5,6}")?;
        let alpha = alpha.min().expect("nonempty");
        let beta = ctx
            .set(&[3, 4])
            .without(alpha)
            .min()
            .expect("one of 3, 4 differs from α");
        // xa first: giving xb color 1 while xa still has it is improper
        step!(eng.recolor_all(&[(xa, beta), (xb, l(1))], "case3/xa-xb-pair"));
        return Ok(Step::Reenter);
    }

    // S_xb = {1,3,4}
    if !eng.critical(l(1), l(2), x, y)? {
        step!(eng.recolor(xb, l(5), "case3/no-12-path"));
        return Err(eng.fail("case3/no-12-path", "color 2 still blocked"));
    }

    let s256 = ctx.set(&[2, 5, 6]);
    eng.expect(
        eng.s(x, a)? == s256 && eng.s(y, ctx.a2)? == s256,
        "case3/s-sets",
        "S_xa = S_ya' = {2,5,6}",
    )?;
    eng.expect(
        eng.s(x, b)? == ctx.set(&[1, 3, 4]),
        "case3/s-sets",
        "S_xb = {1,3,4}",
    )?;

    let (mut three, mut four) = (l(3), l(4));
    let (mut b2, mut d2) = (ctx.b2, ctx.d2);
    let has_3 = eng.critical(l(2), three, x, a)?;
    let has_4 = eng.critical(l(2), four, x, a)?;
    if !has_3 || !has_4 {
        if has_3 {
            std::mem::swap(&mut three, &mut four);
            std::mem::swap(&mut b2, &mut d2);
        }
        step!(eng.recolor(xa, three, "case3/xa-break"));
        step!(eng.recolor(xb, l(5), "case3/xb-break"));
        eng.expect(eng.s(y, b2)? == s256, "case3/xb-break", "S_yb' = {2,5,6}")?;
        let cfg = ConfigurationA::new(y, ctx.a2, b2, vec![d2], vec![]);
        step!(eng.exchange(&cfg, "case3/swap-at-y"));
        return Err(eng.fail("case3/swap-at-y", "no candidate became valid"));
    }

    let l1 = eng.via(b, three)?;
    let l2 = eng.via(b, four)?;
    let l3 = eng.via(b, l(1))?;

    // every (α,β) path from b through α must run to a; otherwise xb and xa
    // can take β and α
    for alpha in [three, four] {
        for beta in [l(5), l(6)] {
            let p = maximal_path(eng.g, eng.c, alpha, beta, b, alpha)?;
            let to_a = p.is_some_and(|p| p.end() == a && p.last_color == beta);
            if !to_a {
                step!(eng.recolor(xb, beta, "case3/path-escape"));
                step!(eng.recolor(xa, alpha, "case3/path-escape"));
                return Err(eng.fail("case3/path-escape", "color 2 still blocked"));
            }
        }
    }

    let s_l1 = eng.s(b, l1)?;
    eng.expect(
        s_l1 == s256 && eng.s(b, l2)? == s256,
        "case3/s-sets",
        "S_bl1 = S_bl2 = {2,5,6}",
    )?;
    step!(eng.recolor(xb, l(5), "case3/xb-to-5"));
    eng.expect(
        eng.critical(l(5), three, x, a)?,
        "case3/xb-to-5",
        "a (3,5) path",
    )?;
    let cfg = ConfigurationA::new(b, l1, l2, vec![l3], vec![x]);
    step!(eng.exchange(&cfg, "case3/swap-at-b"));
    eng.expect(
        !eng.critical(l(5), three, x, a)?,
        "case3/swap-at-b",
        "the (3,5) path broken",
    )?;
    step!(eng.recolor(xa, three, "case3/xa-to-3"));
    Err(eng.fail("case3/xa-to-3", "no candidate became valid"))
}
