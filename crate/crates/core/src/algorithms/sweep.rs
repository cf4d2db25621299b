//! Left-to-right sweep over vertical slabs.
//!
//! The region swept is `{Lo <= y <= U}` (bowties, through their envelopes)
//! intersected with a few extra wedges tested directly (hourglasses). The
//! x-axis is cut at every breakpoint and every crossing of the curves
//! involved. Inside an open slab the curves are disjoint lines, so the slab
//! splits into strips and curve pieces with constant membership; the
//! vertical line at each cut splits into points and open intervals. Atoms
//! are joined when one lies in the closure of the other.

use super::envelope::Envelope;
use crate::geom::{crossing, DoubleWedge, Line, Point};
use crate::rational::Rational;

pub(crate) struct Region<'a> {
    pub lo: Option<&'a Envelope>,
    pub up: Option<&'a Envelope>,
    /// Wedges referenced by envelope owner ids.
    pub bowties: &'a [DoubleWedge],
    /// Wedges tested directly; their bounding lines become curves.
    pub others: &'a [DoubleWedge],
}

pub(crate) struct SweepResult {
    pub count: usize,
    pub witnesses: Vec<Point>,
}

enum Curve<'a> {
    Env(&'a Envelope),
    Line(&'a Line),
}

impl Curve<'_> {
    fn value(&self, x: &Rational) -> Rational {
        match self {
            Curve::Env(e) => e.eval(x).0,
            Curve::Line(l) => l.eval(x),
        }
    }

    fn breaks(&self) -> Vec<&Rational> {
        match self {
            Curve::Env(e) => e.breaks.iter().map(|b| &b.x).collect(),
            Curve::Line(_) => Vec::new(),
        }
    }

    fn piece(&self, i: usize) -> &Line {
        match self {
            Curve::Env(e) => &e.pieces[i].line,
            Curve::Line(l) => l,
        }
    }
}

/// x-coordinates where two piecewise-linear curves cross strictly inside
/// a common piece.
fn crossings_between(a: &Curve, b: &Curve, out: &mut Vec<Rational>) {
    let (xa, xb) = (a.breaks(), b.breaks());
    let (mut ia, mut ib) = (0usize, 0usize);
    let mut lo: Option<&Rational> = None;
    loop {
        let hi = match (xa.get(ia), xb.get(ib)) {
            (Some(p), Some(q)) => Some(if p <= q { *p } else { *q }),
            (Some(p), None) => Some(*p),
            (None, Some(q)) => Some(*q),
            (None, None) => None,
        };
        let (la, lb) = (a.piece(ia), b.piece(ib));
        if la != lb {
            if let Some(c) = crossing(la, lb) {
                if lo.is_none_or(|l| l < &c.x) && hi.is_none_or(|h| &c.x < h) {
                    out.push(c.x);
                }
            }
        }
        let Some(h) = hi else { break };
        if xa.get(ia) == Some(&h) {
            ia += 1;
        }
        if xb.get(ib) == Some(&h) {
            ib += 1;
        }
        lo = Some(h);
    }
}

/// Curve groups of a slab and the node id of each of its atoms.
type SlabAtoms = (Vec<Vec<usize>>, Vec<Option<usize>>);

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Distinct curve values at `x`, ascending, with the curves attaining each.
fn groups(curves: &[Curve], x: &Rational) -> Vec<(Rational, Vec<usize>)> {
    let mut vals: Vec<(Rational, usize)> = curves
        .iter()
        .enumerate()
        .map(|(i, c)| (c.value(x), i))
        .collect();
    vals.sort();
    let mut out: Vec<(Rational, Vec<usize>)> = Vec::new();
    for (v, i) in vals {
        match out.last_mut() {
            Some((w, ids)) if *w == v => ids.push(i),
            _ => out.push((v, vec![i])),
        }
    }
    out
}

/// Representative point of atom `a` (even: gap below value `a/2`, odd:
/// the value itself) on the vertical line at `x`.
fn atom_point(x: &Rational, vals: &[Rational], a: usize) -> Point {
    let one = Rational::one();
    let y = if a % 2 == 1 {
        vals[a / 2].clone()
    } else {
        let i = a / 2;
        match (i.checked_sub(1).map(|j| &vals[j]), vals.get(i)) {
            (Some(p), Some(q)) => Rational::midpoint(p, q),
            (Some(p), None) => p + &one,
            (None, Some(q)) => q - &one,
            (None, None) => Rational::zero(),
        }
    };
    Point::new(x.clone(), y)
}

fn le(a: Option<&Rational>, b: Option<&Rational>) -> bool {
    // None stands for -inf on the left argument and +inf on the right
    match (a, b) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}

fn lt(a: Option<&Rational>, b: Option<&Rational>) -> bool {
    match (a, b) {
        (Some(a), Some(b)) => a < b,
        _ => true,
    }
}

impl Region<'_> {
    fn contains(&self, p: &Point) -> bool {
        if let Some(lo) = self.lo {
            let (v, tight) = lo.eval(&p.x);
            if p.y < v || (p.y == v && !tight.iter().all(|&i| self.bowties[i as usize].contains(p)))
            {
                return false;
            }
        }
        if let Some(up) = self.up {
            let (v, tight) = up.eval(&p.x);
            if p.y > v || (p.y == v && !tight.iter().all(|&i| self.bowties[i as usize].contains(p)))
            {
                return false;
            }
        }
        self.others.iter().all(|d| d.contains(p))
    }

    fn curves(&self) -> Vec<Curve<'_>> {
        let mut curves = Vec::new();
        curves.extend(self.lo.map(Curve::Env));
        curves.extend(self.up.map(Curve::Env));
        for d in self.others {
            curves.push(Curve::Line(d.l1()));
            curves.push(Curve::Line(d.l2()));
        }
        curves
    }

    /// Sorted distinct x-coordinates of breakpoints and crossings.
    pub fn events(&self) -> Vec<Rational> {
        let curves = self.curves();
        let mut xs: Vec<Rational> = Vec::new();
        for c in &curves {
            xs.extend(c.breaks().into_iter().cloned());
        }
        for i in 0..curves.len() {
            for j in 0..i {
                crossings_between(&curves[i], &curves[j], &mut xs);
            }
        }
        xs.sort();
        xs.dedup();
        xs
    }

    pub fn sweep(&self) -> SweepResult {
        let curves = self.curves();
        let events = self.events();
        let mut uf = UnionFind(Vec::new());
        let mut witnesses: Vec<(usize, Point)> = Vec::new();
        let mut select = |uf: &mut UnionFind, p: Point| -> Option<usize> {
            if self.contains(&p) {
                let id = uf.add();
                witnesses.push((id, p));
                Some(id)
            } else {
                None
            }
        };
        // previous slab: curve groups and node ids of its atoms
        let mut prev: Option<SlabAtoms> = None;
        for s in 0..=events.len() {
            let left = s.checked_sub(1).map(|i| &events[i]);
            let right = events.get(s);
            let x_rep = match (left, right) {
                (Some(a), Some(b)) => Rational::midpoint(a, b),
                (None, Some(b)) => b - &Rational::one(),
                (Some(a), None) => a + &Rational::one(),
                (None, None) => Rational::zero(),
            };
            let g = groups(&curves, &x_rep);
            let vals: Vec<Rational> = g.iter().map(|(v, _)| v.clone()).collect();
            let ids: Vec<Option<usize>> = (0..2 * vals.len() + 1)
                .map(|a| select(&mut uf, atom_point(&x_rep, &vals, a)))
                .collect();
            link_chain(&mut uf, &ids);
            let members: Vec<Vec<usize>> = g.into_iter().map(|(_, m)| m).collect();
            if let (Some(x), Some((pm, pids))) = (left, prev.take()) {
                // the cut at `x` joins the previous slab to this one
                let sv = groups(&curves, x);
                let svals: Vec<Rational> = sv.iter().map(|(v, _)| v.clone()).collect();
                let sids: Vec<Option<usize>> = (0..2 * svals.len() + 1)
                    .map(|a| select(&mut uf, atom_point(x, &svals, a)))
                    .collect();
                link_chain(&mut uf, &sids);
                for (groups, slab_ids) in [(&pm, &pids), (&members, &ids)] {
                    link_slab_to_cut(&mut uf, &curves, x, groups, slab_ids, &svals, &sids);
                }
            }
            prev = Some((members, ids));
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for (id, p) in witnesses {
            if seen.insert(uf.find(id)) {
                out.push(p);
            }
        }
        SweepResult {
            count: out.len(),
            witnesses: out,
        }
    }
}

/// Consecutive atoms on one vertical line or in one slab touch.
fn link_chain(uf: &mut UnionFind, ids: &[Option<usize>]) {
    for w in ids.windows(2) {
        if let (Some(a), Some(b)) = (w[0], w[1]) {
            uf.union(a, b);
        }
    }
}

fn link_slab_to_cut(
    uf: &mut UnionFind,
    curves: &[Curve],
    x: &Rational,
    groups: &[Vec<usize>],
    slab_ids: &[Option<usize>],
    svals: &[Rational],
    sids: &[Option<usize>],
) {
    let at: Vec<Rational> = groups.iter().map(|m| curves[m[0]].value(x)).collect();
    for (a, id) in slab_ids.iter().enumerate() {
        let Some(id) = *id else { continue };
        // closure of the slab atom on the cut line
        let (lo, hi) = if a % 2 == 1 {
            (Some(&at[a / 2]), Some(&at[a / 2]))
        } else {
            let i = a / 2;
            (i.checked_sub(1).map(|j| &at[j]), at.get(i))
        };
        for (b, sid) in sids.iter().enumerate() {
            let Some(sid) = *sid else { continue };
            let touches = if b % 2 == 1 {
                let v = Some(&svals[b / 2]);
                le(lo, v) && le(v, hi)
            } else {
                let i = b / 2;
                let r = i.checked_sub(1).map(|j| &svals[j]);
                let s = svals.get(i);
                lt(lo, s) && lt(r, hi)
            };
            if touches {
                uf.union(id, sid);
            }
        }
    }
}
