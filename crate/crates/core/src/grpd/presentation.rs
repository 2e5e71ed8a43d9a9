use serde::Serialize;

/// One letter of a word: generator index and exponent sign (true = +1).
pub type Letter = (usize, bool);

/// A word in the free group on the presentation's generators.
pub type Word = Vec<Letter>;

pub fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|&(g, s)| (g, !s)).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&(g, s)) if g == l.0 && s != l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Free reduction plus removal of cancelling prefix/suffix pairs; relators
/// are only defined up to conjugation.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut v = free_reduce(w);
    while v.len() >= 2 {
        let first = v[0];
        let last = *v.last().unwrap();
        if first.0 == last.0 && first.1 != last.1 {
            v.remove(0);
            v.pop();
        } else {
            break;
        }
    }
    v
}

/// A finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// Serialized form used in report documents.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<String>>,
}

impl GroupPresentation {
    pub fn trivial() -> GroupPresentation {
        GroupPresentation { generators: vec![], relators: vec![] }
    }

    pub fn is_trivial_presentation(&self) -> bool {
        self.generators.is_empty()
    }

    /// Exponent-sum matrix, one row per generator and one column per relator.
    /// Its cokernel invariants are the abelianization of the group.
    pub fn abelianization_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.relators.len()]; self.generators.len()];
        for (j, r) in self.relators.iter().enumerate() {
            for &(g, s) in r {
                m[g][j] += if s { 1 } else { -1 };
            }
        }
        m
    }

    /// Present a finite group from a tabulated group value.
    pub fn from_multiplication_table_struct(t: &super::coset::FiniteGroupTable) -> GroupPresentation {
        GroupPresentation::from_multiplication_table(0, &t.table)
    }

    /// Present a finite group given by its multiplication table: one
    /// generator per non-identity element, one relator per table entry.
    pub fn from_multiplication_table(identity: usize, table: &[Vec<usize>]) -> GroupPresentation {
        let n = table.len();
        let gen_of: Vec<Option<usize>> = {
            let mut v = vec![None; n];
            let mut next = 0;
            for (e, slot) in v.iter_mut().enumerate() {
                if e != identity {
                    *slot = Some(next);
                    next += 1;
                }
            }
            v
        };
        let generators = (0..n).filter(|&e| e != identity).map(|e| format!("g{e}")).collect();
        let letter = |e: usize| gen_of[e].map(|g| (g, true));
        let mut relators = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = table[a][b];
                let mut w: Word = Vec::new();
                w.extend(letter(a));
                w.extend(letter(b));
                if let Some(l) = letter(c) {
                    w.push((l.0, false));
                }
                let w = free_reduce(&w);
                if !w.is_empty() {
                    relators.push(w);
                }
            }
        }
        GroupPresentation { generators, relators }
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&(g, s)| {
                            if s {
                                self.generators[g].clone()
                            } else {
                                format!("{}^-1", self.generators[g])
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Deterministic Tietze simplification: free/cyclic reduction, removal of
    /// duplicate relators, elimination of generators forced trivial by
    /// length-one relators, substitution from length-two relators, and
    /// single-occurrence eliminations that strictly reduce total length.
    pub fn simplify(&self) -> GroupPresentation {
        let mut p = self.clone();
        loop {
            p.reduce_relators();
            if p.eliminate_unit_relator() {
                continue;
            }
            if p.eliminate_pair_relator() {
                continue;
            }
            if p.eliminate_single_occurrence() {
                continue;
            }
            break;
        }
        p
    }

    fn reduce_relators(&mut self) {
        let mut seen: Vec<Word> = Vec::new();
        for r in &self.relators {
            let w = cyclic_reduce(r);
            if !w.is_empty() && !seen.contains(&w) {
                seen.push(w);
            }
        }
        self.relators = seen;
    }

    /// Drop the generator entirely, remapping indices above it.
    fn remove_generator(&mut self, g: usize) {
        self.generators.remove(g);
        for r in &mut self.relators {
            r.retain(|&(x, _)| x != g);
            for l in r.iter_mut() {
                if l.0 > g {
                    l.0 -= 1;
                }
            }
        }
    }

    /// Substitute gen -> word (for a positive occurrence) everywhere, then
    /// drop the generator.
    fn substitute(&mut self, g: usize, word: &[Letter]) {
        let inv = invert_word(word);
        for r in &mut self.relators {
            let mut out: Word = Vec::new();
            for &(x, s) in r.iter() {
                if x == g {
                    out.extend(if s { word.iter().copied() } else { inv.iter().copied() });
                } else {
                    out.push((x, s));
                }
            }
            *r = out;
        }
        self.remove_generator(g);
    }

    fn eliminate_unit_relator(&mut self) -> bool {
        if let Some(r) = self.relators.iter().find(|r| r.len() == 1) {
            let g = r[0].0;
            self.remove_generator(g);
            true
        } else {
            false
        }
    }

    fn eliminate_pair_relator(&mut self) -> bool {
        for (ri, r) in self.relators.iter().enumerate() {
            if r.len() != 2 {
                continue;
            }
            let (x, a) = r[0];
            let (y, b) = r[1];
            if x == y {
                continue; // torsion relator x^2; keep
            }
            // x^a y^b = 1 identifies the two generators: eliminating either,
            // a positive occurrence expands to the other with sign (a != b).
            let (kill, keep) = if y > x { (y, x) } else { (x, y) };
            let word = vec![(keep, a != b)];
            let mut next = self.clone();
            next.relators.remove(ri);
            next.substitute(kill, &word);
            *self = next;
            return true;
        }
        false
    }

    fn eliminate_single_occurrence(&mut self) -> bool {
        for (ri, r) in self.relators.iter().enumerate() {
            if r.len() > 3 {
                continue;
            }
            for (pos, &(g, s)) in r.iter().enumerate() {
                if r.iter().filter(|&&(x, _)| x == g).count() != 1 {
                    continue;
                }
                let occ_elsewhere: usize = self
                    .relators
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != ri)
                    .map(|(_, w)| w.iter().filter(|&&(x, _)| x == g).count())
                    .sum();
                let repl_len = r.len() - 1;
                if occ_elsewhere * repl_len >= r.len() + occ_elsewhere {
                    continue;
                }
                // u g^s v = 1  =>  g^s = u^{-1} v^{-1}
                let mut rhs = invert_word(&r[..pos]);
                rhs.extend(invert_word(&r[pos + 1..]));
                if !s {
                    rhs = invert_word(&rhs);
                }
                let word = free_reduce(&rhs);
                let mut next = self.clone();
                next.relators.remove(ri);
                next.substitute(g, &word);
                *self = next;
                return true;
            }
        }
        false
    }
}
