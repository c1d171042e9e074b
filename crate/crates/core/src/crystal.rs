//! Abstract crystals: string lengths, the signature rule, bounded graph
//! exploration and local axiom checks.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Debug, Write as _};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::QSeries;

/// Default bound on the length of an `e_i`/`f_i` string.
pub const DEFAULT_STRING_CAP: usize = 10_000;

/// Cartan type of the index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    /// Affine `sl_n`, colors `0..n`.
    Affine(usize),
    /// Finite `sl_m`, colors `1..m`.
    Finite(usize),
}

impl CartanType {
    pub fn index_set(&self) -> Vec<usize> {
        match *self {
            CartanType::Affine(n) => (0..n).collect(),
            CartanType::Finite(m) => (1..m).collect(),
        }
    }

    /// The Cartan matrix entry `a_{ij}`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return 2;
        }
        match *self {
            CartanType::Affine(n) => {
                let d = (i + n - j) % n;
                if n == 2 {
                    -2
                } else if d == 1 || d == n - 1 {
                    -1
                } else {
                    0
                }
            }
            CartanType::Finite(_) => {
                if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

/// A crystal given by its operators. `None` plays the role of the zero vector.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn cartan_type(&self) -> CartanType;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;

    fn index_set(&self) -> Vec<usize> {
        self.cartan_type().index_set()
    }

    fn epsilon(&self, b: &Self::Elem, i: usize) -> Result<usize> {
        string_length(b, |x| self.e(x, i), DEFAULT_STRING_CAP, i)
    }

    fn phi(&self, b: &Self::Elem, i: usize) -> Result<usize> {
        string_length(b, |x| self.f(x, i), DEFAULT_STRING_CAP, i)
    }
}

/// Number of times `step` can be applied before hitting zero.
pub fn string_length<E: Clone>(
    b: &E,
    step: impl Fn(&E) -> Option<E>,
    cap: usize,
    color: usize,
) -> Result<usize> {
    let mut cur = b.clone();
    let mut count = 0;
    while let Some(next) = step(&cur) {
        count += 1;
        if count > cap {
            return Err(Error::IntegrabilityViolation { color, cap });
        }
        cur = next;
    }
    Ok(count)
}

/// `ε_i` with an explicit cap.
pub fn epsilon_capped<C: Crystal>(c: &C, b: &C::Elem, i: usize, cap: usize) -> Result<usize> {
    string_length(b, |x| c.e(x, i), cap, i)
}

/// `φ_i` with an explicit cap.
pub fn phi_capped<C: Crystal>(c: &C, b: &C::Elem, i: usize, cap: usize) -> Result<usize> {
    string_length(b, |x| c.f(x, i), cap, i)
}

/// Outcome of the signature rule on a word whose `j`-th factor contributes
/// `)^{ε_j} (^{φ_j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// Factor holding the first uncanceled `(` from the left.
    pub f_factor: Option<usize>,
    /// Factor holding the first uncanceled `)` from the right.
    pub e_factor: Option<usize>,
    /// Uncanceled `)` count, i.e. `ε_i` of the word.
    pub epsilon: usize,
    /// Uncanceled `(` count, i.e. `φ_i` of the word.
    pub phi: usize,
}

/// Runs the bracket cancellation with two counter passes.
pub fn signature(data: &[(usize, usize)]) -> Signature {
    // Right to left: ")" seen so far cancel "(" to their left.
    let mut closes = 0usize;
    let mut f_factor = None;
    let mut phi = 0;
    for (j, &(eps, ph)) in data.iter().enumerate().rev() {
        let matched = closes.min(ph);
        closes -= matched;
        if ph > matched {
            f_factor = Some(j);
            phi += ph - matched;
        }
        closes += eps;
    }
    let mut opens = 0usize;
    let mut e_factor = None;
    let mut epsilon = 0;
    for (j, &(eps, ph)) in data.iter().enumerate() {
        let matched = opens.min(eps);
        opens -= matched;
        if eps > matched {
            e_factor = Some(j);
            epsilon += eps - matched;
        }
        opens += ph;
    }
    Signature {
        f_factor,
        e_factor,
        epsilon,
        phi,
    }
}

fn word_data<C: Crystal>(c: &C, word: &[C::Elem], i: usize) -> Result<Vec<(usize, usize)>> {
    word.iter()
        .map(|b| Ok((c.epsilon(b, i)?, c.phi(b, i)?)))
        .collect()
}

/// `f_i` on `b_1 ⊗ ... ⊗ b_k`.
pub fn tensor_f<C: Crystal>(c: &C, word: &[C::Elem], i: usize) -> Result<Option<Vec<C::Elem>>> {
    let sig = signature(&word_data(c, word, i)?);
    Ok(sig.f_factor.map(|j| {
        let mut out = word.to_vec();
        out[j] = c.f(&word[j], i).expect("uncanceled ( implies f is defined");
        out
    }))
}

/// `e_i` on `b_1 ⊗ ... ⊗ b_k`.
pub fn tensor_e<C: Crystal>(c: &C, word: &[C::Elem], i: usize) -> Result<Option<Vec<C::Elem>>> {
    let sig = signature(&word_data(c, word, i)?);
    Ok(sig.e_factor.map(|j| {
        let mut out = word.to_vec();
        out[j] = c.e(&word[j], i).expect("uncanceled ) implies e is defined");
        out
    }))
}

/// Signature of a word, exposing `ε_i`/`φ_i` of the tensor product.
pub fn tensor_signature<C: Crystal>(c: &C, word: &[C::Elem], i: usize) -> Result<Signature> {
    Ok(signature(&word_data(c, word, i)?))
}

/// Tensor power words over a base crystal, as a crystal in their own right.
pub struct TensorProduct<'a, C> {
    pub base: &'a C,
}

impl<C: Crystal> Crystal for TensorProduct<'_, C> {
    type Elem = Vec<C::Elem>;

    fn cartan_type(&self) -> CartanType {
        self.base.cartan_type()
    }

    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        tensor_f(self.base, b, i).expect("factor strings are finite")
    }

    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem> {
        tensor_e(self.base, b, i).expect("factor strings are finite")
    }

    fn epsilon(&self, b: &Self::Elem, i: usize) -> Result<usize> {
        Ok(tensor_signature(self.base, b, i)?.epsilon)
    }

    fn phi(&self, b: &Self::Elem, i: usize) -> Result<usize> {
        Ok(tensor_signature(self.base, b, i)?.phi)
    }
}

/// Order in which [`explore_with`] visits vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    #[default]
    BreadthFirst,
    DepthFirst,
}

#[derive(Debug, Clone, Copy)]
pub struct ExploreOptions {
    pub traversal: Traversal,
    pub max_vertices: usize,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        Self {
            traversal: Traversal::BreadthFirst,
            max_vertices: 5_000_000,
        }
    }
}

/// A finite ball of a crystal graph. Vertices are sorted by
/// `(degree, element)`; edges are `f`-arrows `(source, color, target)`.
#[derive(Debug, Clone)]
pub struct CrystalGraph<E> {
    pub vertices: Vec<E>,
    pub degrees: Vec<usize>,
    pub edges: Vec<(usize, usize, usize)>,
    pub bound: usize,
    pub index_set: Vec<usize>,
    index: HashMap<E, usize>,
}

/// Explores the ball of principal degree at most `bound` around `seed`,
/// which sits in degree 0.
pub fn explore<C: Crystal>(c: &C, seed: &C::Elem, bound: usize) -> Result<CrystalGraph<C::Elem>> {
    explore_with(c, &[(seed.clone(), 0)], bound, ExploreOptions::default())
}

/// Explores from several seeds with given degrees, closing under `f_i`
/// up to degree `bound` and under `e_i` down to degree 0.
pub fn explore_with<C: Crystal>(
    c: &C,
    seeds: &[(C::Elem, usize)],
    bound: usize,
    options: ExploreOptions,
) -> Result<CrystalGraph<C::Elem>> {
    let colors = c.index_set();
    let mut degree_of: HashMap<C::Elem, usize> = HashMap::new();
    let mut queue: VecDeque<C::Elem> = VecDeque::new();
    let mut edges: Vec<(C::Elem, usize, C::Elem)> = Vec::new();

    let visit = |b: C::Elem,
                     d: usize,
                     degree_of: &mut HashMap<C::Elem, usize>,
                     queue: &mut VecDeque<C::Elem>|
     -> Result<()> {
        match degree_of.get(&b) {
            Some(&old) if old != d => Err(Error::InconsistentGrading(old, d)),
            Some(_) => Ok(()),
            None => {
                if degree_of.len() >= options.max_vertices {
                    return Err(Error::SizeCap(options.max_vertices));
                }
                degree_of.insert(b.clone(), d);
                queue.push_back(b);
                Ok(())
            }
        }
    };

    for (s, d) in seeds {
        if *d <= bound {
            visit(s.clone(), *d, &mut degree_of, &mut queue)?;
        }
    }
    while let Some(b) = match options.traversal {
        Traversal::BreadthFirst => queue.pop_front(),
        Traversal::DepthFirst => queue.pop_back(),
    } {
        let d = degree_of[&b];
        for &i in &colors {
            if d < bound {
                if let Some(up) = c.f(&b, i) {
                    visit(up.clone(), d + 1, &mut degree_of, &mut queue)?;
                    edges.push((b.clone(), i, up));
                }
            }
            if let Some(down) = c.e(&b, i) {
                if d == 0 {
                    return Err(Error::InconsistentGrading(0, usize::MAX));
                }
                visit(down.clone(), d - 1, &mut degree_of, &mut queue)?;
                edges.push((down, i, b.clone()));
            }
        }
    }

    let mut vertices: Vec<(usize, C::Elem)> = degree_of.into_iter().map(|(b, d)| (d, b)).collect();
    vertices.sort();
    let index: HashMap<C::Elem, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, (_, b))| (b.clone(), k))
        .collect();
    let mut edges: Vec<(usize, usize, usize)> = edges
        .into_iter()
        .map(|(s, i, t)| (index[&s], i, index[&t]))
        .collect();
    edges.sort();
    edges.dedup();
    let (degrees, vertices) = vertices.into_iter().unzip();
    Ok(CrystalGraph {
        vertices,
        degrees,
        edges,
        bound,
        index_set: colors,
        index,
    })
}

impl<E: Clone + Eq + Hash> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }

    /// Number of vertices in each degree `0..=maxdeg`.
    pub fn q_character(&self, maxdeg: usize) -> Result<QSeries> {
        if maxdeg > self.bound {
            return Err(Error::UnderExplored {
                explored: self.bound,
                needed: maxdeg,
            });
        }
        let mut s = QSeries::zero(maxdeg);
        let mut counts = vec![0u64; maxdeg + 1];
        for &d in &self.degrees {
            if d <= maxdeg {
                counts[d] += 1;
            }
        }
        for (k, c) in counts.into_iter().enumerate() {
            s.set_coeff(k, c);
        }
        Ok(s)
    }

    /// Connected components of the underlying undirected graph, each as
    /// sorted vertex indices, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &(s, _, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Vertices killed by every `e_i`.
    pub fn highest_weight_elements<C: Crystal<Elem = E>>(&self, c: &C) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.index_set.iter().all(|&i| c.e(&self.vertices[v], i).is_none()))
            .collect()
    }

    /// DOT with one edge label per color.
    pub fn to_dot(&self, label: impl Fn(&E) -> String) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let text = label(v).replace('"', "\\\"");
            let _ = writeln!(out, "  v{k} [label=\"{text}\"];");
        }
        for &(s, i, t) in &self.edges {
            let _ = writeln!(out, "  v{s} -> v{t} [label=\"{i}\", color=\"{}\"];", dot_color(i));
        }
        out.push_str("}\n");
        out
    }

    /// `{vertices: [...], edges: [[src, i, dst], ...]}`.
    pub fn to_json(&self) -> serde_json::Value
    where
        E: Serialize,
    {
        serde_json::json!({
            "vertices": self.vertices,
            "degrees": self.degrees,
            "edges": self.edges.iter().map(|&(s, i, t)| [s, i, t]).collect::<Vec<_>>(),
        })
    }
}

impl<E: Eq> PartialEq for CrystalGraph<E> {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.degrees == other.degrees
            && self.edges == other.edges
            && self.bound == other.bound
    }
}

fn dot_color(i: usize) -> &'static str {
    const PALETTE: [&str; 8] = [
        "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan",
    ];
    PALETTE[i % PALETTE.len()]
}

/// One failed local check, with the vertex (and colors) where it failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub vertex: usize,
    pub colors: (usize, usize),
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at vertex {} colors {:?}: {}",
            self.rule, self.vertex, self.colors, self.detail
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub vertices_checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

struct Local<'a, C: Crystal> {
    c: &'a C,
    cap: usize,
}

impl<C: Crystal> Local<'_, C> {
    fn delta(&self, b: &C::Elem, i: usize) -> Result<i64> {
        Ok(-(epsilon_capped(self.c, b, i, self.cap)? as i64))
    }

    fn phi(&self, b: &C::Elem, i: usize) -> Result<i64> {
        Ok(phi_capped(self.c, b, i, self.cap)? as i64)
    }

    /// `(Δ_i δ_j, Δ_i φ_j)` at `x`, given `e_i x`.
    fn up_diff(&self, x: &C::Elem, ex: &C::Elem, j: usize) -> Result<(i64, i64)> {
        Ok((
            self.delta(ex, j)? - self.delta(x, j)?,
            self.phi(ex, j)? - self.phi(x, j)?,
        ))
    }

    /// `(∇_i δ_j, ∇_i φ_j)` at `y`, given `f_i y`.
    fn down_diff(&self, y: &C::Elem, fy: &C::Elem, j: usize) -> Result<(i64, i64)> {
        Ok((
            self.delta(y, j)? - self.delta(fy, j)?,
            self.phi(y, j)? - self.phi(fy, j)?,
        ))
    }

    fn chain(&self, b: &C::Elem, ops: &[(bool, usize)]) -> Option<C::Elem> {
        let mut cur = b.clone();
        for &(raise, i) in ops {
            cur = if raise { self.c.e(&cur, i)? } else { self.c.f(&cur, i)? };
        }
        Some(cur)
    }
}

/// Checks the graph against its callbacks and the simply-laced local
/// axioms at every vertex of the ball.
pub fn check_local_axioms<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>) -> AxiomReport {
    check_local_axioms_capped(c, g, DEFAULT_STRING_CAP)
}

pub fn check_local_axioms_capped<C: Crystal>(
    c: &C,
    g: &CrystalGraph<C::Elem>,
    cap: usize,
) -> AxiomReport {
    let mut report = AxiomReport {
        vertices_checked: g.len(),
        violations: Vec::new(),
    };
    let mut fail = |rule: &'static str, vertex: usize, colors: (usize, usize), detail: String| {
        report.violations.push(Violation {
            rule,
            vertex,
            colors,
            detail,
        });
    };

    for &(s, i, t) in &g.edges {
        let got = c.f(&g.vertices[s], i);
        if got.as_ref() != Some(&g.vertices[t]) {
            fail("edge", s, (i, i), format!("recorded edge {s} -{i}-> {t} disagrees with f_{i}"));
        }
    }

    let local = Local { c, cap };
    let colors = &g.index_set;
    let ct = c.cartan_type();
    for (v, x) in g.vertices.iter().enumerate() {
        for &i in colors {
            if let Some(y) = c.f(x, i) {
                if c.e(&y, i).as_ref() != Some(x) {
                    fail("inverse", v, (i, i), format!("e_{i} f_{i} x != x"));
                }
            }
            if let Some(y) = c.e(x, i) {
                if c.f(&y, i).as_ref() != Some(x) {
                    fail("inverse", v, (i, i), format!("f_{i} e_{i} x != x"));
                }
            }
            if let Err(err) = local.delta(x, i).and_then(|_| local.phi(x, i)) {
                fail("string", v, (i, i), err.to_string());
            }
        }
        for &i in colors {
            for &j in colors {
                if i == j {
                    continue;
                }
                if let Err(err) = check_pair(&local, ct, x, i, j, v, &mut fail) {
                    fail("string", v, (i, j), err.to_string());
                }
            }
        }
    }
    report
}

fn check_pair<C: Crystal>(
    local: &Local<'_, C>,
    ct: CartanType,
    x: &C::Elem,
    i: usize,
    j: usize,
    v: usize,
    fail: &mut impl FnMut(&'static str, usize, (usize, usize), String),
) -> Result<()> {
    let c = local.c;
    let a = ct.cartan(i, j);
    if a == 0 {
        for (ri, rj) in [(false, false), (true, false), (false, true), (true, true)] {
            let ij = local.chain(x, &[(rj, j), (ri, i)]);
            let ji = local.chain(x, &[(ri, i), (rj, j)]);
            let defined_i = if ri { c.e(x, i) } else { c.f(x, i) }.is_some();
            let defined_j = if rj { c.e(x, j) } else { c.f(x, j) }.is_some();
            if defined_i && defined_j && ij != ji {
                fail("commute", v, (i, j), format!("operators of colors {i},{j} do not commute"));
            }
        }
        return Ok(());
    }
    let ei = c.e(x, i);
    let ej = c.e(x, j);
    if let Some(ex) = &ei {
        let (dd, dp) = local.up_diff(x, ex, j)?;
        if dd + dp != a {
            fail("P2", v, (i, j), format!("Δδ + Δφ = {} != {a}", dd + dp));
        }
        if dd > 0 || dp > 0 {
            fail("P3", v, (i, j), format!("Δδ = {dd}, Δφ = {dp}"));
        }
        if let Some(ejx) = &ej {
            let (dd_ji, _) = local.up_diff(x, ejx, i)?;
            if dd == 0 {
                let y1 = local.chain(x, &[(true, j), (true, i)]);
                let y2 = local.chain(x, &[(true, i), (true, j)]);
                match (&y1, &y2) {
                    (Some(y), Some(y2)) if y == y2 => {
                        let fy = c.f(y, j).expect("y = e_j e_i x");
                        let (_, np) = local.down_diff(y, &fy, i)?;
                        if np != 0 {
                            fail("P4", v, (i, j), format!("∇_j φ_i(y) = {np}"));
                        }
                    }
                    _ => fail("P4", v, (i, j), "e_i e_j x != e_j e_i x".into()),
                }
            }
            if dd == -1 && dd_ji == -1 {
                let y1 = local.chain(x, &[(true, i), (true, j), (true, j), (true, i)]);
                let y2 = local.chain(x, &[(true, j), (true, i), (true, i), (true, j)]);
                match (&y1, &y2) {
                    (Some(y), Some(y2)) if y == y2 => {
                        let fi = c.f(y, i).expect("y in image of e_i");
                        let fj = c.f(y, j).expect("y in image of e_j");
                        let (_, a1) = local.down_diff(y, &fi, j)?;
                        let (_, a2) = local.down_diff(y, &fj, i)?;
                        if a1 != -1 || a2 != -1 {
                            fail("P5", v, (i, j), format!("∇φ values {a1}, {a2}"));
                        }
                    }
                    _ => fail("P5", v, (i, j), "e_i e_j^2 e_i x != e_j e_i^2 e_j x".into()),
                }
            }
        }
    }
    let fi = c.f(x, i);
    let fj = c.f(x, j);
    if let (Some(fx), Some(fjx)) = (&fi, &fj) {
        let (_, np) = local.down_diff(x, fx, j)?;
        let (_, np_ji) = local.down_diff(x, fjx, i)?;
        if np == 0 {
            let y1 = local.chain(x, &[(false, j), (false, i)]);
            let y2 = local.chain(x, &[(false, i), (false, j)]);
            match (&y1, &y2) {
                (Some(y), Some(y2)) if y == y2 => {
                    let ey = c.e(y, j).expect("y = f_j f_i x");
                    let (dd, _) = local.up_diff(y, &ey, i)?;
                    if dd != 0 {
                        fail("P4'", v, (i, j), format!("Δ_j δ_i(y) = {dd}"));
                    }
                }
                _ => fail("P4'", v, (i, j), "f_i f_j x != f_j f_i x".into()),
            }
        }
        if np == -1 && np_ji == -1 {
            let y1 = local.chain(x, &[(false, i), (false, j), (false, j), (false, i)]);
            let y2 = local.chain(x, &[(false, j), (false, i), (false, i), (false, j)]);
            match (&y1, &y2) {
                (Some(y), Some(y2)) if y == y2 => {
                    let ei = c.e(y, i).expect("y in image of f_i");
                    let ej = c.e(y, j).expect("y in image of f_j");
                    let (a1, _) = local.up_diff(y, &ei, j)?;
                    let (a2, _) = local.up_diff(y, &ej, i)?;
                    if a1 != -1 || a2 != -1 {
                        fail("P5'", v, (i, j), format!("Δδ values {a1}, {a2}"));
                    }
                }
                _ => fail("P5'", v, (i, j), "f_i f_j^2 f_i x != f_j f_i^2 f_j x".into()),
            }
        }
    }
    Ok(())
}

/// The `sl_2` crystal `0 → 1 → ... → len`, handy for tests and examples.
#[derive(Debug, Clone, Copy)]
pub struct StringCrystal {
    pub len: usize,
}

impl Crystal for StringCrystal {
    type Elem = usize;

    fn cartan_type(&self) -> CartanType {
        CartanType::Finite(2)
    }

    fn f(&self, b: &usize, _i: usize) -> Option<usize> {
        (*b < self.len).then_some(b + 1)
    }

    fn e(&self, b: &usize, _i: usize) -> Option<usize> {
        b.checked_sub(1)
    }
}
