//! Bounded Todd–Coxeter coset enumeration over the trivial subgroup, plus
//! isomorphism search between the resulting finite multiplication tables.
//!
//! The budget is counted in table deductions (definitions, deductions and
//! coincidence merges each cost one unit). An exhausted budget is a normal
//! outcome, not an error: the caller degrades to an `Unknown` verdict.

use super::presentation::{GroupPresentation, Word};

/// A finite group tabulated by its full multiplication table.
/// Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    pub order: usize,
    /// table[a][b] = a·b
    pub table: Vec<Vec<usize>>,
    /// element realizing each presentation generator
    pub generator_elements: Vec<usize>,
    /// per element, a representative word as a sequence of generator indices
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub enum CosetOutcome {
    Finite(FiniteGroupTable),
    BudgetExhausted { budget: u64 },
}

struct Tables {
    ngens: usize,
    /// per coset, 2*ngens slots: column 2g = action of generator g,
    /// column 2g+1 = action of its inverse
    act: Vec<Vec<Option<usize>>>,
    repr: Vec<usize>,
    dead: Vec<bool>,
    queue: std::collections::VecDeque<(usize, usize)>,
    used: u64,
    budget: u64,
}

fn col((g, s): (usize, bool)) -> usize {
    2 * g + usize::from(!s)
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Tables {
    fn new(ngens: usize, budget: u64) -> Tables {
        Tables {
            ngens,
            act: vec![vec![None; 2 * ngens]; 1],
            repr: vec![0],
            dead: vec![false],
            queue: Default::default(),
            used: 0,
            budget,
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.repr[x] != x {
            x = self.repr[x];
        }
        x
    }

    fn get(&self, c: usize, col: usize) -> Option<usize> {
        self.act[c][col].map(|d| self.find(d))
    }

    fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.budget
    }

    fn new_coset(&mut self) -> Option<usize> {
        if !self.tick() {
            return None;
        }
        let c = self.act.len();
        self.act.push(vec![None; 2 * self.ngens]);
        self.repr.push(c);
        self.dead.push(false);
        Some(c)
    }

    /// Set c·col = d together with the inverse link; queues a coincidence if
    /// an existing entry disagrees. Returns false when out of budget.
    fn define(&mut self, c: usize, col: usize, d: usize) -> bool {
        if !self.tick() {
            return false;
        }
        let c = self.find(c);
        let d = self.find(d);
        match self.get(c, col) {
            Some(e) if e != d => self.queue.push_back((e, d)),
            Some(_) => {}
            None => self.act[c][col] = Some(d),
        }
        match self.get(d, inv_col(col)) {
            Some(e) if e != c => self.queue.push_back((e, c)),
            Some(_) => {}
            None => self.act[d][inv_col(col)] = Some(c),
        }
        true
    }

    fn process_coincidences(&mut self) -> bool {
        while let Some((a, b)) = self.queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            if !self.tick() {
                return false;
            }
            let keep = a.min(b);
            let kill = a.max(b);
            self.repr[kill] = keep;
            self.dead[kill] = true;
            for col in 0..2 * self.ngens {
                if let Some(d) = self.act[kill][col] {
                    let d = self.find(d);
                    match self.get(keep, col) {
                        Some(e) if e != d => self.queue.push_back((e, d)),
                        Some(_) => {}
                        None => self.act[keep][col] = Some(d),
                    }
                }
            }
        }
        true
    }

    /// Scan relator `w` at coset `c`, filling gaps with new cosets
    /// (HLT strategy). Returns false when out of budget.
    fn scan_and_fill(&mut self, c: usize, w: &Word) -> bool {
        if w.is_empty() {
            return true;
        }
        let c = self.find(c);
        let mut i = 0;
        let mut f = c;
        loop {
            // forward as far as defined
            while i < w.len() {
                match self.get(f, col(w[i])) {
                    Some(d) => {
                        f = d;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == w.len() {
                if f != c {
                    self.queue.push_back((f, c));
                }
                return true;
            }
            // backward as far as defined
            let mut j = w.len();
            let mut b = c;
            while j > i {
                match self.get(b, inv_col(col(w[j - 1]))) {
                    Some(d) => {
                        b = d;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                if f != b {
                    self.queue.push_back((f, b));
                }
                return true;
            }
            if j == i + 1 {
                return self.define(f, col(w[i]), b);
            }
            // gap of length > 1: define one new coset, then resume the
            // forward walk through it
            let d = match self.new_coset() {
                Some(d) => d,
                None => return false,
            };
            if !self.define(f, col(w[i]), d) {
                return false;
            }
            f = self.find(f);
        }
    }

    fn live(&self) -> Vec<usize> {
        (0..self.act.len()).filter(|&c| !self.dead[c]).collect()
    }

    fn is_total(&self) -> bool {
        self.live()
            .into_iter()
            .all(|c| (0..2 * self.ngens).all(|col| self.act[c][col].is_some()))
    }
}

/// Run the enumeration. On success the presented group is finite and its full
/// multiplication table is returned.
pub fn enumerate_cosets(p: &GroupPresentation, budget: u64) -> CosetOutcome {
    let ngens = p.generators.len();
    if ngens == 0 {
        return CosetOutcome::Finite(FiniteGroupTable {
            order: 1,
            table: vec![vec![0]],
            generator_elements: vec![],
            words: vec![vec![]],
        });
    }
    let mut t = Tables::new(ngens, budget);
    let exhausted = CosetOutcome::BudgetExhausted { budget };
    loop {
        let mut progressed = false;
        let before = t.used;
        for c in t.live() {
            if t.dead[c] {
                continue;
            }
            for w in &p.relators {
                if !t.scan_and_fill(c, w) {
                    return exhausted;
                }
                if !t.process_coincidences() {
                    return exhausted;
                }
            }
        }
        if t.used > before {
            progressed = true;
        }
        // enumerate the whole group: every live coset needs every column
        let mut filled_one = false;
        'fill: for c in t.live() {
            let c = t.find(c);
            if t.dead[c] {
                continue;
            }
            for column in 0..2 * ngens {
                if t.get(c, column).is_none() {
                    let d = match t.new_coset() {
                        Some(d) => d,
                        None => return exhausted,
                    };
                    if !t.define(c, column, d) {
                        return exhausted;
                    }
                    filled_one = true;
                    break 'fill;
                }
            }
        }
        if !filled_one && !progressed && t.is_total() {
            break;
        }
        if !filled_one && !progressed {
            // no change possible anymore
            break;
        }
    }
    if !t.is_total() {
        return exhausted;
    }

    // compact live cosets and rebuild the action table
    let live = t.live();
    let mut rank = vec![usize::MAX; t.act.len()];
    for (i, &c) in live.iter().enumerate() {
        rank[c] = i;
    }
    let n = live.len();
    let act: Vec<Vec<usize>> = live
        .iter()
        .map(|&c| (0..2 * ngens).map(|col| rank[t.get(c, col).unwrap()]).collect())
        .collect();
    let id = rank[t.find(0)];

    // representative word (as column sequence) per element, by BFS over
    // positive generator columns from the identity
    let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
    word[id] = Some(vec![]);
    let mut bfs = std::collections::VecDeque::from([id]);
    while let Some(c) = bfs.pop_front() {
        for g in 0..ngens {
            let d = act[c][2 * g];
            if word[d].is_none() {
                let mut w = word[c].clone().unwrap();
                w.push(2 * g);
                word[d] = Some(w);
                bfs.push_back(d);
            }
        }
    }
    debug_assert!(word.iter().all(|w| w.is_some()), "generators reach every coset");

    let apply = |mut c: usize, w: &[usize]| {
        for &column in w {
            c = act[c][column];
        }
        c
    };
    // relabel so the identity is element 0, keeping BFS order otherwise
    let mut order_map = vec![usize::MAX; n];
    order_map[id] = 0;
    let mut next = 1;
    for c in 0..n {
        if c != id {
            order_map[c] = next;
            next += 1;
        }
    }
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let w = word[b].as_ref().unwrap();
            table[order_map[a]][order_map[b]] = order_map[apply(a, w)];
        }
    }
    let generator_elements = (0..ngens).map(|g| order_map[act[id][2 * g]]).collect();
    let mut words = vec![vec![]; n];
    for c in 0..n {
        words[order_map[c]] = word[c].as_ref().unwrap().iter().map(|&col| col / 2).collect();
    }
    CosetOutcome::Finite(FiniteGroupTable { order: n, table, generator_elements, words })
}

impl FiniteGroupTable {
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.table[y][x];
            k += 1;
        }
        k
    }

    /// Deterministic small generating set: greedily add the smallest element
    /// outside the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = 1;
        while generated < self.order {
            let g = {
                let closure = self.closure(&gens);
                (0..self.order).find(|&x| !closure[x]).unwrap()
            };
            gens.push(g);
            generated = self.closure(&gens).iter().filter(|&&b| b).count();
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Search for a group isomorphism between two multiplication tables.
/// Backtracks over images of a generating set of `a`, pruned by element
/// orders; the extension to all elements is forced and then verified.
pub fn find_table_isomorphism(a: &FiniteGroupTable, b: &FiniteGroupTable) -> Option<Vec<usize>> {
    if a.order != b.order {
        return None;
    }
    let mut orders_a: Vec<usize> = (0..a.order).map(|x| a.element_order(x)).collect();
    let mut orders_b: Vec<usize> = (0..b.order).map(|x| b.element_order(x)).collect();
    let ord_a = orders_a.clone();
    let ord_b = orders_b.clone();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return None;
    }
    let gens = a.generating_set();
    let mut images = vec![0usize; gens.len()];
    backtrack_iso(a, b, &gens, &ord_a, &ord_b, &mut images, 0)
}

fn backtrack_iso(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    gens: &[usize],
    ord_a: &[usize],
    ord_b: &[usize],
    images: &mut Vec<usize>,
    k: usize,
) -> Option<Vec<usize>> {
    if k == gens.len() {
        return extend_hom(a, b, gens, images);
    }
    for cand in 0..b.order {
        if ord_b[cand] != ord_a[gens[k]] {
            continue;
        }
        images[k] = cand;
        if let Some(m) = backtrack_iso(a, b, gens, ord_a, ord_b, images, k + 1) {
            return Some(m);
        }
    }
    None
}

/// Extend generator images to the forced map and verify it is a bijective
/// homomorphism.
fn extend_hom(
    a: &FiniteGroupTable,
    b: &FiniteGroupTable,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = a.order;
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    for (g, &img) in gens.iter().zip(images) {
        if map[*g] != usize::MAX && map[*g] != img {
            return None;
        }
        map[*g] = img;
    }
    loop {
        let mut grew = false;
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for &g in gens {
                let y = a.table[x][g];
                let want = b.table[map[x]][map[g]];
                if map[y] == usize::MAX {
                    map[y] = want;
                    grew = true;
                } else if map[y] != want {
                    return None;
                }
            }
        }
        if !grew {
            break;
        }
    }
    if map.iter().any(|&x| x == usize::MAX) {
        return None;
    }
    let mut seen = vec![false; n];
    for &x in &map {
        if seen[x] {
            return None;
        }
        seen[x] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.table[x][y]] != b.table[map[x]][map[y]] {
                return None;
            }
        }
    }
    Some(map)
}
