use super::twocat::Fin2Category;

/// Strict 2-functor given by its three assignments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoFunctor {
    pub obj: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

impl TwoFunctor {
    pub fn identity(a: &Fin2Category) -> Self {
        TwoFunctor { obj: (0..a.object_count()).collect(), one: (0..a.one_count()).collect(), two: (0..a.two_count()).collect() }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &TwoFunctor) -> TwoFunctor {
        TwoFunctor {
            obj: self.obj.iter().map(|&x| g.obj[x]).collect(),
            one: self.one.iter().map(|&x| g.one[x]).collect(),
            two: self.two.iter().map(|&x| g.two[x]).collect(),
        }
    }

    /// Problems with `self` as a 2-functor `src → tgt`; empty when it is one.
    pub fn check(&self, src: &Fin2Category, tgt: &Fin2Category) -> Vec<String> {
        let mut out = Vec::new();
        if self.obj.len() != src.object_count() || self.one.len() != src.one_count() || self.two.len() != src.two_count() {
            return vec!["assignment lengths do not match the source".into()];
        }
        if self.obj.iter().any(|&x| x >= tgt.object_count())
            || self.one.iter().any(|&x| x >= tgt.one_count())
            || self.two.iter().any(|&x| x >= tgt.two_count())
        {
            return vec!["assignment leaves the target".into()];
        }
        for f in 0..src.one_count() {
            let (o, i) = (src.one(f), tgt.one(self.one[f]));
            if i.src != self.obj[o.src] || i.tgt != self.obj[o.tgt] {
                out.push(format!("1-cell {f} is sent to an ill-typed image"));
            }
        }
        for a in 0..src.two_count() {
            let (t, i) = (src.two(a), tgt.two(self.two[a]));
            if i.src != self.one[t.src] || i.tgt != self.one[t.tgt] {
                out.push(format!("2-cell {a} is sent to an ill-typed image"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..src.object_count() {
            if self.one[src.id1(x)] != tgt.id1(self.obj[x]) {
                out.push(format!("identity 1-cell of {x} not preserved"));
            }
        }
        for f in 0..src.one_count() {
            if self.two[src.id2(f)] != tgt.id2(self.one[f]) {
                out.push(format!("identity 2-cell of {f} not preserved"));
            }
        }
        for c in composites(src) {
            let (x, y, z) = c.triple();
            let image = match c {
                Composite::H1(..) => tgt.hcomp1(self.one[x], self.one[y]).map(|w| w == self.one[z]),
                Composite::V(..) => tgt.vcomp(self.two[x], self.two[y]).map(|w| w == self.two[z]),
                Composite::H2(..) => tgt.hcomp2(self.two[x], self.two[y]).map(|w| w == self.two[z]),
            };
            if image != Some(true) {
                out.push(format!("composite {c:?} not preserved"));
            }
        }
        out
    }

    pub fn is_valid(&self, src: &Fin2Category, tgt: &Fin2Category) -> bool {
        self.check(src, tgt).is_empty()
    }
}

/// One entry of a composition table: `(x, y) ↦ z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Composite {
    H1(usize, usize, usize),
    V(usize, usize, usize),
    H2(usize, usize, usize),
}

impl Composite {
    fn triple(self) -> (usize, usize, usize) {
        match self {
            Composite::H1(x, y, z) | Composite::V(x, y, z) | Composite::H2(x, y, z) => (x, y, z),
        }
    }
}

fn composites(a: &Fin2Category) -> Vec<Composite> {
    let (_, _, _, _, _, v, h1, h2) = a.tables();
    let mut out: Vec<Composite> = h1.iter().map(|(&(x, y), &z)| Composite::H1(x, y, z)).collect();
    out.extend(v.iter().map(|(&(x, y), &z)| Composite::V(x, y, z)));
    out.extend(h2.iter().map(|(&(x, y), &z)| Composite::H2(x, y, z)));
    out.sort_by_key(|c| match *c {
        Composite::H1(x, y, z) => (0, x, y, z),
        Composite::V(x, y, z) => (1, x, y, z),
        Composite::H2(x, y, z) => (2, x, y, z),
    });
    out
}

/// Constraint bookkeeping for the backtracking enumerator: each table entry is checked at the
/// step where its last cell is assigned.
struct Plan {
    ones_due: Vec<Vec<(usize, usize, usize)>>,
    twos_due: Vec<Vec<Composite>>,
}

impl Plan {
    fn new(src: &Fin2Category) -> Self {
        let mut ones_due = vec![Vec::new(); src.one_count()];
        let mut twos_due = vec![Vec::new(); src.two_count()];
        for c in composites(src) {
            let (x, y, z) = c.triple();
            let last = x.max(y).max(z);
            match c {
                Composite::H1(..) => ones_due[last].push((x, y, z)),
                _ => twos_due[last].push(c),
            }
        }
        Plan { ones_due, twos_due }
    }
}

/// Enumerates 2-functors `src → tgt` in the order objects, 1-cells, 2-cells (each in index
/// order, candidates in index order). `visit` returns `true` to stop.
///
/// With `bijective`, only isomorphisms are produced.
pub fn enumerate_functors(
    src: &Fin2Category,
    tgt: &Fin2Category,
    bijective: bool,
    visit: &mut dyn FnMut(&TwoFunctor) -> bool,
) {
    if bijective
        && (src.object_count() != tgt.object_count() || src.one_count() != tgt.one_count() || src.two_count() != tgt.two_count())
    {
        return;
    }
    let plan = Plan::new(src);
    let mut st = State {
        src,
        tgt,
        bijective,
        plan: &plan,
        f: TwoFunctor { obj: vec![usize::MAX; src.object_count()], one: vec![usize::MAX; src.one_count()], two: vec![usize::MAX; src.two_count()] },
        used: [vec![false; tgt.object_count()], vec![false; tgt.one_count()], vec![false; tgt.two_count()]],
    };
    st.objects(0, visit);
}

struct State<'a> {
    src: &'a Fin2Category,
    tgt: &'a Fin2Category,
    bijective: bool,
    plan: &'a Plan,
    f: TwoFunctor,
    used: [Vec<bool>; 3],
}

impl State<'_> {
    fn take(&mut self, level: usize, x: usize) -> bool {
        if !self.bijective {
            return true;
        }
        if self.used[level][x] {
            return false;
        }
        self.used[level][x] = true;
        true
    }

    fn release(&mut self, level: usize, x: usize) {
        if self.bijective {
            self.used[level][x] = false;
        }
    }

    fn objects(&mut self, i: usize, visit: &mut dyn FnMut(&TwoFunctor) -> bool) -> bool {
        if i == self.src.object_count() {
            return self.ones(0, visit);
        }
        for y in 0..self.tgt.object_count() {
            if !self.take(0, y) {
                continue;
            }
            self.f.obj[i] = y;
            let ok = !self.bijective
                || (0..=i).all(|j| {
                    self.src.hom1(i, j).len() == self.tgt.hom1(y, self.f.obj[j]).len()
                        && self.src.hom1(j, i).len() == self.tgt.hom1(self.f.obj[j], y).len()
                });
            let stop = ok && self.objects(i + 1, visit);
            self.release(0, y);
            if stop {
                return true;
            }
        }
        false
    }

    fn ones(&mut self, f: usize, visit: &mut dyn FnMut(&TwoFunctor) -> bool) -> bool {
        if f == self.src.one_count() {
            return self.twos(0, visit);
        }
        let o = self.src.one(f);
        let cands: Vec<usize> = if self.src.is_id1(f) {
            vec![self.tgt.id1(self.f.obj[o.src])]
        } else {
            self.tgt.hom1(self.f.obj[o.src], self.f.obj[o.tgt]).to_vec()
        };
        for y in cands {
            if !self.take(1, y) {
                continue;
            }
            self.f.one[f] = y;
            let ok = (!self.bijective
                || (0..=f).all(|g| {
                    self.src.hom2(f, g).len() == self.tgt.hom2(y, self.f.one[g]).len()
                        && self.src.hom2(g, f).len() == self.tgt.hom2(self.f.one[g], y).len()
                }))
                && self.plan.ones_due[f].iter().all(|&(x, y2, z)| self.tgt.hcomp1(self.f.one[x], self.f.one[y2]) == Some(self.f.one[z]));
            let stop = ok && self.ones(f + 1, visit);
            self.release(1, y);
            if stop {
                return true;
            }
        }
        false
    }

    fn twos(&mut self, a: usize, visit: &mut dyn FnMut(&TwoFunctor) -> bool) -> bool {
        if a == self.src.two_count() {
            return visit(&self.f);
        }
        let t = self.src.two(a);
        let cands: Vec<usize> = if self.src.is_id2(a) {
            vec![self.tgt.id2(self.f.one[t.src])]
        } else {
            self.tgt.hom2(self.f.one[t.src], self.f.one[t.tgt]).to_vec()
        };
        for y in cands {
            if !self.take(2, y) {
                continue;
            }
            self.f.two[a] = y;
            let ok = self.plan.twos_due[a].iter().all(|&c| match c {
                Composite::V(x, y2, z) => self.tgt.vcomp(self.f.two[x], self.f.two[y2]) == Some(self.f.two[z]),
                Composite::H2(x, y2, z) => self.tgt.hcomp2(self.f.two[x], self.f.two[y2]) == Some(self.f.two[z]),
                Composite::H1(..) => true,
            });
            let stop = ok && self.twos(a + 1, visit);
            self.release(2, y);
            if stop {
                return true;
            }
        }
        false
    }
}

/// All 2-functors `src → tgt`.
pub fn all_functors(src: &Fin2Category, tgt: &Fin2Category) -> Vec<TwoFunctor> {
    let mut out = Vec::new();
    enumerate_functors(src, tgt, false, &mut |f| {
        out.push(f.clone());
        false
    });
    out
}

/// First isomorphism `a → b` in enumeration order.
pub fn find_2iso(a: &Fin2Category, b: &Fin2Category) -> Option<TwoFunctor> {
    let mut found = None;
    enumerate_functors(a, b, true, &mut |f| {
        found = Some(f.clone());
        true
    });
    found
}
