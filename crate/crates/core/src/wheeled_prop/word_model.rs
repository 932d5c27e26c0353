//! Test oracle: 𝓔 realized inside an exterior algebra on odd symbols.
//!
//! A corolla with fiber F is θ_{a_1}…θ_{a_n} η_j (ascending a's), a wheel X is
//! θ_{x_1}…θ_{x_k}, and a diagram is the product of its factors in canonical
//! order, rescaled by a fixed sign per block. Contracting input i with output j
//! brings η_j and then θ_i to the front and deletes them. All signs come from
//! reordering odd symbols, so this model is independent of the case analysis
//! in the engine.

use super::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    Theta(usize),
    Eta(usize),
}

fn normalization(d: &WheeledDiagram) -> Sign {
    let mut s = Sign::Plus;
    for f in d.fibers() {
        let n = f.len();
        s *= Sign::parity((n - 1) * (n.max(2) - 2) / 2);
    }
    for w in d.wheels() {
        let m = w.len();
        s *= Sign::parity(m * (m + 1) / 2);
    }
    s
}

fn word(d: &WheeledDiagram) -> Vec<Sym> {
    let mut w = Vec::new();
    for (j, f) in d.fibers().iter().enumerate() {
        w.extend(f.iter().map(|&a| Sym::Theta(a)));
        w.push(Sym::Eta(j + 1));
    }
    for x in d.wheels() {
        w.extend(x.iter().map(|&a| Sym::Theta(a)));
    }
    w
}

/// Sign of reordering `w` into the canonical word of `target`.
fn reorder_sign(w: &[Sym], target: &WheeledDiagram) -> Sign {
    let canonical = word(target);
    let positions: Vec<usize> = w
        .iter()
        .map(|s| canonical.iter().position(|t| t == s).expect("same symbols"))
        .collect();
    assert_eq!(positions.len(), canonical.len());
    sort_signature(&positions)
}

/// Rescaled monomial `w` whose blocks describe `target` up to order.
fn finish(
    w: &[Sym],
    sign: Sign,
    source_norm: Sign,
    target: WheeledDiagram,
) -> (WheeledDiagram, Sign) {
    let s = sign * source_norm * reorder_sign(w, &target) * normalization(&target);
    (target, s)
}

pub fn contract_diagram(d: &WheeledDiagram, i: usize, j: usize) -> Option<(WheeledDiagram, Sign)> {
    let mut w = word(d);
    let pe = w.iter().position(|&s| s == Sym::Eta(j)).unwrap();
    w.remove(pe);
    let pt = w.iter().position(|&s| s == Sym::Theta(i)).unwrap();
    w.remove(pt);
    let sign = Sign::parity(pe + pt);
    let w: Vec<Sym> = w
        .into_iter()
        .map(|s| match s {
            Sym::Theta(a) => Sym::Theta(if a > i { a - 1 } else { a }),
            Sym::Eta(b) => Sym::Eta(if b > j { b - 1 } else { b }),
        })
        .collect();

    let fj = d.fibers()[j - 1].clone();
    let mut fibers: Vec<Vec<usize>> = d.fibers().to_vec();
    let mut wheels: Vec<Vec<usize>> = d.wheels().to_vec();
    if fj.contains(&i) {
        if fj.len() == 1 {
            return None;
        }
        wheels.push(fj.iter().copied().filter(|&x| x != i).collect());
    } else if let Some(f) = fibers.iter_mut().find(|f| f.contains(&i)) {
        f.retain(|&x| x != i);
        f.extend(&fj);
    } else {
        let x = wheels.iter_mut().find(|x| x.contains(&i)).unwrap();
        x.retain(|&y| y != i);
        x.extend(&fj);
    }
    fibers.remove(j - 1);
    let shift = |b: &Vec<usize>| b.iter().map(|&x| if x > i { x - 1 } else { x }).collect();
    let fibers = fibers.iter().map(shift).collect();
    let wheels = wheels.iter().map(shift).collect();
    let (target, _) = canonical_form(d.q() - 1, fibers, wheels).unwrap();
    Some(finish(&w, sign, normalization(d), target))
}

pub fn horizontal_diagrams(a: &WheeledDiagram, b: &WheeledDiagram) -> (WheeledDiagram, Sign) {
    let (qa, la) = a.biarity();
    let mut w = word(a);
    w.extend(word(b).into_iter().map(|s| match s {
        Sym::Theta(x) => Sym::Theta(x + qa),
        Sym::Eta(y) => Sym::Eta(y + la),
    }));
    let shift = |blk: &Vec<usize>| blk.iter().map(|&x| x + qa).collect::<Vec<_>>();
    let mut fibers = a.fibers().to_vec();
    fibers.extend(b.fibers().iter().map(shift));
    let mut wheels = a.wheels().to_vec();
    wheels.extend(b.wheels().iter().map(shift));
    let (target, _) = canonical_form(qa + b.q(), fibers, wheels).unwrap();
    finish(&w, Sign::Plus, normalization(a) * normalization(b), target)
}

pub fn act_inputs_diagram(p: &Permutation, d: &WheeledDiagram) -> (WheeledDiagram, Sign) {
    let inv = p.inverse();
    let w: Vec<Sym> = word(d)
        .into_iter()
        .map(|s| match s {
            Sym::Theta(a) => Sym::Theta(inv.apply(a)),
            e => e,
        })
        .collect();
    let relabel = |b: &Vec<usize>| b.iter().map(|&x| inv.apply(x)).collect::<Vec<_>>();
    let (target, _) = canonical_form(
        d.q(),
        d.fibers().iter().map(relabel).collect(),
        d.wheels().iter().map(relabel).collect(),
    )
    .unwrap();
    finish(&w, Sign::Plus, normalization(d), target)
}

pub fn act_outputs_diagram(p: &Permutation, d: &WheeledDiagram) -> (WheeledDiagram, Sign) {
    let w: Vec<Sym> = word(d)
        .into_iter()
        .map(|s| match s {
            Sym::Eta(b) => Sym::Eta(p.apply(b)),
            t => t,
        })
        .collect();
    let mut fibers = vec![Vec::new(); d.l()];
    for (k, f) in d.fibers().iter().enumerate() {
        fibers[p.apply(k + 1) - 1] = f.clone();
    }
    let target = WheeledDiagram::from_canonical(d.q(), fibers, d.wheels().to_vec());
    finish(&w, Sign::Plus, normalization(d), target)
}

fn lift<F>(e: &Element, q: usize, l: usize, f: F) -> Element
where
    F: Fn(&WheeledDiagram) -> Option<(WheeledDiagram, Sign)>,
{
    e.map_terms(q, l, |d| Ok(f(d))).unwrap()
}

pub fn contract(i: usize, j: usize, e: &Element) -> Element {
    lift(e, e.q() - 1, e.l() - 1, |d| contract_diagram(d, i, j))
}

pub fn horizontal(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero(a.q() + b.q(), a.l() + b.l());
    for (da, ca) in a.terms() {
        for (db, cb) in b.terms() {
            let (d, s) = horizontal_diagrams(da, db);
            out.add_signed(d, &(ca * cb), s);
        }
    }
    out
}

pub fn vertical(g: &Element, f: &Element) -> Element {
    let l = g.l();
    let mut acc = horizontal(g, f);
    for _ in 0..g.q() {
        acc = contract(1, l + 1, &acc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate_basis;

    #[test]
    fn contraction_agrees_with_engine() {
        let mut checked = 0;
        for q in 1..=5 {
            for l in 1..=q {
                for d in enumerate_basis(q, l) {
                    for i in 1..=q {
                        for j in 1..=l {
                            assert_eq!(
                                super::contract_diagram(&d, i, j),
                                super::super::contract_diagram(&d, i, j),
                                "{d} ({i},{j})"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(checked, 22824);
    }

    #[test]
    fn horizontal_agrees_with_engine() {
        for qa in 0..=3 {
            for qb in 0..=3 - qa.min(3) {
                for la in 0..=qa {
                    for lb in 0..=qb {
                        for a in enumerate_basis(qa, la) {
                            for b in enumerate_basis(qb, lb) {
                                assert_eq!(
                                    super::horizontal_diagrams(&a, &b),
                                    super::super::horizontal_diagrams(&a, &b)
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn actions_agree_with_engine() {
        for q in 0..=4 {
            for l in 0..=q {
                for d in enumerate_basis(q, l) {
                    let e = Element::basis(d.clone());
                    for p in Permutation::all(q) {
                        let (t, s) = act_inputs_diagram(&p, &d);
                        assert_eq!(
                            super::super::act_inputs(&p, &e).unwrap(),
                            Element::signed(t, s)
                        );
                    }
                    for p in Permutation::all(l) {
                        let (t, s) = act_outputs_diagram(&p, &d);
                        assert_eq!(
                            super::super::act_outputs(&p, &e).unwrap(),
                            Element::signed(t, s)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn vertical_agrees_with_engine() {
        for n in 0..=3 {
            for l in 0..=n {
                for m in n..=4.min(n + 2) {
                    for g in enumerate_basis(n, l) {
                        for f in enumerate_basis(m, n) {
                            let (g, f) = (Element::basis(g.clone()), Element::basis(f));
                            assert_eq!(vertical(&g, &f), super::super::vertical(&g, &f).unwrap());
                        }
                    }
                }
            }
        }
    }
}
