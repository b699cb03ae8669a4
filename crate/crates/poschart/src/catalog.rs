//! Built-in examples with their expected artifacts.
//!
//! Entries are plain data; nothing is computed when an entry is loaded.
//! Every expected value carries a `source`: `reference` for values taken
//! from the published example, `derived` for values obtained by an
//! independent closed form.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Reference,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact<T> {
    pub value: T,
    pub source: Source,
}

fn reference<T>(value: T) -> Option<Fact<T>> {
    Some(Fact { value, source: Source::Reference })
}

fn derived<T>(value: T) -> Option<Fact<T>> {
    Some(Fact { value, source: Source::Derived })
}

/// How a computed ideal is compared with the stored generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealMatch {
    /// Canonical strings, generator by generator.
    Strings,
    /// Same set of polynomials, any order.
    PolynomialSet,
    /// Same ideal (Gröbner comparison).
    Ideal,
}

/// How an alternative presentation is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationCheck {
    IdealEqual,
    VanishesOnPhi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SaturationOutcome {
    Equal,
    /// The computation is expected to exceed the given step budget.
    ResourceLimit { max_pairs: usize, max_terms: usize, max_steps: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiFact {
    pub t_exponent: Vec<i64>,
    pub f_powers: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NefFact {
    pub dim: usize,
    pub ray_count: usize,
    /// Divisors `v` whose classes are the nef rays, when known.
    pub lifts: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartEntry {
    pub label: &'static str,
    pub sections: Vec<String>,
    /// Ray order for this chart; falls back to the entry's order.
    pub ray_order: Option<Vec<Vec<i64>>>,
    pub m: Option<Fact<Vec<Vec<i64>>>>,
    pub ideal: Option<Fact<Vec<String>>>,
    pub ideal_match: IdealMatch,
    pub phi: Option<Fact<Vec<PhiFact>>>,
    pub degree: Option<Fact<(usize, u64)>>,
    pub saturation: Option<Fact<SaturationOutcome>>,
    pub presentation: Option<Fact<Vec<String>>>,
    pub presentation_check: PresentationCheck,
    pub scattering_count: Option<Fact<usize>>,
    /// Moment map components in `y1..yn, s1..sk`.
    pub moment: Option<Fact<Vec<String>>>,
}

impl ChartEntry {
    fn new(label: &'static str, sections: &[&str]) -> ChartEntry {
        ChartEntry {
            label,
            sections: strings(sections),
            ray_order: None,
            m: None,
            ideal: None,
            ideal_match: IdealMatch::Strings,
            phi: None,
            degree: None,
            saturation: None,
            presentation: None,
            presentation_check: PresentationCheck::IdealEqual,
            scattering_count: None,
            moment: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub dim: usize,
    pub vertices: Option<Vec<Vec<i64>>>,
    /// Pinned ray order (rows of `F`) for matrix comparisons.
    pub ray_order: Option<Vec<Vec<i64>>>,
    /// The section list exactly as published, when the catalog uses a corrected list.
    pub published_sections: Option<Vec<String>>,
    pub charts: Vec<ChartEntry>,
    pub f_vector: Option<Fact<Vec<usize>>>,
    pub nef: Option<Fact<NefFact>>,
    /// Error kind expected from `chart`, for negative examples.
    pub expected_error: Option<Fact<String>>,
}

impl CatalogEntry {
    fn new(name: &'static str, description: &'static str, dim: usize) -> CatalogEntry {
        CatalogEntry {
            name,
            description,
            dim,
            vertices: None,
            ray_order: None,
            published_sections: None,
            charts: Vec::new(),
            f_vector: None,
            nef: None,
            expected_error: None,
        }
    }

    pub fn chart(&self, label: Option<&str>) -> Option<&ChartEntry> {
        match label {
            None => self.charts.first(),
            Some(l) => self.charts.iter().find(|c| c.label == l),
        }
    }

    /// Ray order used by the given chart.
    pub fn chart_ray_order<'a>(&'a self, chart: &'a ChartEntry) -> Option<&'a Vec<Vec<i64>>> {
        chart.ray_order.as_ref().or(self.ray_order.as_ref())
    }
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn rows<const N: usize>(r: &[[i64; N]]) -> Vec<Vec<i64>> {
    r.iter().map(|x| x.to_vec()).collect()
}

fn phi(items: &[(&[i64], &[i64])]) -> Vec<PhiFact> {
    items.iter().map(|(t, f)| PhiFact { t_exponent: t.to_vec(), f_powers: f.to_vec() }).collect()
}

pub const NAMES: &[&str] = &[
    "pentagon", "square", "p1xp1_e", "simplex1", "simplex2", "simplex3", "simplex4", "simplex5", "hexagon", "pezzotope",
    "perm3", "p121", "diamond",
];

pub fn names() -> &'static [&'static str] {
    NAMES
}

pub fn get(name: &str) -> Option<CatalogEntry> {
    Some(match name {
        "pentagon" => pentagon(),
        "square" => square(),
        "p1xp1_e" => p1xp1_e(),
        "hexagon" => hexagon(),
        "pezzotope" => pezzotope(),
        "perm3" => perm3(),
        "p121" => p121(),
        "diamond" => diamond(),
        _ => {
            let d: usize = name.strip_prefix("simplex")?.parse().ok()?;
            if !(1..=5).contains(&d) {
                return None;
            }
            simplex(d)
        }
    })
}

pub fn all() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| get(n).expect("listed entry")).collect()
}

fn pentagon() -> CatalogEntry {
    let mut e = CatalogEntry::new("pentagon", "pentagon with vertices (0,0),(0,2),(2,2),(2,1),(1,0)", 2);
    e.vertices = Some(rows(&[[0, 0], [0, 2], [2, 2], [2, 1], [1, 0]]));
    e.ray_order = Some(rows(&[[1, 0, -1, -1, 0], [0, 1, 1, 0, -1]]));
    e.nef = reference(NefFact {
        dim: 3,
        ray_count: 3,
        lifts: Some(rows(&[[0, 0, 1, 1, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 1]])),
    });
    let mut c = ChartEntry::new("main", &["1 + t1", "1 + t2", "1 + t2 + t1*t2"]);
    c.m = reference(rows(&[
        [1, 0, -1, -1, 0],
        [0, 1, 1, 0, -1],
        [0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 1],
    ]));
    c.ideal = reference(strings(&["y3*y4 + y1 - 1", "y5 + y2*y3 - 1", "y4*y5 + y2*y3*y4 + y1*y2 - 1"]));
    c.phi = reference(phi(&[
        (&[1, 0], &[1, 0, 0]),
        (&[0, 1], &[-1, 0, 1]),
        (&[0, 0], &[1, 1, -1]),
        (&[0, 0], &[0, -1, 1]),
        (&[0, 0], &[0, 1, 0]),
    ]));
    c.scattering_count = reference(2);
    c.moment = reference(strings(&[
        "s1*y1 + s3*y1*y2",
        "s2*y2*y3 + s3*y2*y3*y4 + s3*y1*y2",
        "s1*y3*y4 + s2*y2*y3 + s3*y2*y3*y4",
        "s1*y3*y4 + s3*y4*y5 + s3*y2*y3*y4",
        "s2*y5 + s3*y4*y5",
    ]));
    e.charts.push(c);
    e
}

fn square_f() -> Vec<Vec<i64>> {
    rows(&[[1, 0, -1, 0], [0, 1, 0, -1]])
}

fn square() -> CatalogEntry {
    let mut e = CatalogEntry::new("square", "unit square, toric variety P1 x P1", 2);
    e.vertices = Some(rows(&[[0, 0], [1, 0], [0, 1], [1, 1]]));
    e.ray_order = Some(square_f());
    e.nef = reference(NefFact { dim: 2, ray_count: 2, lifts: Some(rows(&[[0, 0, 1, 0], [0, 0, 0, 1]])) });
    let mut c = ChartEntry::new("identity", &["1 + t1", "1 + t2"]);
    c.m = reference(rows(&[[1, 0, -1, 0], [0, 1, 0, -1], [0, 0, 1, 0], [0, 0, 0, 1]]));
    c.ideal = reference(strings(&["y1 + y3 - 1", "y2 + y4 - 1"]));
    c.ideal_match = IdealMatch::PolynomialSet;
    c.phi = reference(phi(&[(&[1, 0], &[1, 0]), (&[0, 1], &[0, 1]), (&[0, 0], &[1, 0]), (&[0, 0], &[0, 1])]));
    c.scattering_count = derived(1);
    c.moment = derived(strings(&["s1*y1", "s2*y2", "s1*y3", "s2*y4"]));
    e.charts.push(c);
    e
}

fn p1xp1_e() -> CatalogEntry {
    let mut e = CatalogEntry::new("p1xp1_e", "P1 x P1 with sections from E = [[2,1],[1,1]]", 2);
    e.vertices = Some(rows(&[[0, 0], [3, 0], [0, 2], [3, 2]]));
    e.ray_order = Some(square_f());
    let mut c = ChartEntry::new("e2111", &["(1 + t1)^2*(1 + t2)", "(1 + t1)*(1 + t2)"]);
    c.m = reference(rows(&[[1, 0, -1, 0], [0, 1, 0, -1], [0, 0, 2, 1], [0, 0, 1, 1]]));
    c.ideal = reference(strings(&["y1 + y3 - 1", "y2 + y4 - 1"]));
    c.ideal_match = IdealMatch::Ideal;
    c.phi = reference(phi(&[(&[1, 0], &[1, -1]), (&[0, 1], &[-1, 2]), (&[0, 0], &[1, -1]), (&[0, 0], &[-1, 2])]));
    c.moment = reference(strings(&[
        "2*s1*y1^2*y2 + s2*y1*y2 + 2*s1*y1^2*y4 + s2*y1*y4 + 2*s1*y1*y2*y3 + 2*s1*y1*y3*y4",
        "s1*y1^2*y2 + s2*y1*y2 + 2*s1*y1*y2*y3 + s1*y2*y3^2 + s2*y2*y3",
        "2*s1*y1*y2*y3 + 2*s1*y1*y3*y4 + 2*s1*y2*y3^2 + s2*y2*y3 + 2*s1*y3^2*y4 + s2*y3*y4",
        "s1*y1^2*y4 + s2*y1*y4 + 2*s1*y1*y3*y4 + s1*y3^2*y4 + s2*y3*y4",
    ]));
    e.charts.push(c);
    e
}

fn simplex(d: usize) -> CatalogEntry {
    const NAMES: [&str; 5] = ["simplex1", "simplex2", "simplex3", "simplex4", "simplex5"];
    const DESCRIPTIONS: [&str; 5] = [
        "standard 1-simplex, toric variety P1",
        "standard 2-simplex, toric variety P2",
        "standard 3-simplex, toric variety P3",
        "standard 4-simplex, toric variety P4",
        "standard 5-simplex, toric variety P5",
    ];
    let mut e = CatalogEntry::new(NAMES[d - 1], DESCRIPTIONS[d - 1], d);
    let mut verts = vec![vec![0; d]];
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = 1;
        verts.push(v);
    }
    e.vertices = Some(verts);
    let f: Vec<Vec<i64>> = (0..d)
        .map(|i| {
            let mut r = vec![0; d + 1];
            r[i] = 1;
            r[d] = -1;
            r
        })
        .collect();
    e.ray_order = Some(f);
    let mut lift = vec![0; d + 1];
    lift[d] = 1;
    e.nef = derived(NefFact { dim: 1, ray_count: 1, lifts: Some(vec![lift]) });
    let section = core::iter::once("1".to_string()).chain((1..=d).map(|i| format!("t{i}"))).collect::<Vec<_>>().join(" + ");
    let mut c = ChartEntry::new("main", &[section.as_str()]);
    let ideal = (1..=d + 1).map(|i| format!("y{i}")).collect::<Vec<_>>().join(" + ") + " - 1";
    c.ideal = reference(vec![ideal]);
    c.ideal_match = IdealMatch::PolynomialSet;
    let mut ph = Vec::new();
    for i in 0..d {
        let mut t = vec![0; d];
        t[i] = 1;
        ph.push(PhiFact { t_exponent: t, f_powers: vec![1] });
    }
    ph.push(PhiFact { t_exponent: vec![0; d], f_powers: vec![1] });
    c.phi = reference(ph);
    if d == 1 {
        c.scattering_count = derived(1);
    }
    e.charts.push(c);
    e
}

fn hexagon_f() -> Vec<Vec<i64>> {
    rows(&[[0, -1, 1, 0, -1, 1], [-1, 0, 0, 1, 1, -1]])
}

fn hexagon() -> CatalogEntry {
    let mut e = CatalogEntry::new("hexagon", "hexagon with vertices (0,0),(0,2),(1,3),(2,0),(3,1),(3,3)", 2);
    e.vertices = Some(rows(&[[0, 0], [0, 2], [1, 3], [2, 0], [3, 1], [3, 3]]));
    e.ray_order = Some(hexagon_f());
    e.nef = reference(NefFact {
        dim: 4,
        ray_count: 5,
        lifts: Some(rows(&[
            [0, 0, 0, 0, 1, 1],
            [1, 0, 0, 0, 0, 1],
            [1, 1, 0, 0, 0, 1],
            [0, 1, 0, 0, 1, 0],
            [0, 1, 0, 0, 1, 1],
        ])),
    });
    let mut c1 = ChartEntry::new("chart1", &["1 + t1", "1 + t2", "1 + t1 + t1*t2", "1 + t2 + t1*t2"]);
    c1.ideal = reference(strings(&[
        "y2*y5 + y3*y6 - 1",
        "y1*y6 + y4*y5 - 1",
        "y1*y2*y5 + y1*y3*y6 + y3*y4*y5 - 1",
        "y1*y2*y6 + y2*y4*y5 + y3*y4*y6 - 1",
    ]));
    c1.degree = reference((2, 10));
    c1.saturation = reference(SaturationOutcome::Equal);
    e.charts.push(c1);

    // Columns (u3, u1, u2, u4, u5, u6) of the ray matrix above.
    let mut c2 = ChartEntry::new("chart2", &["1 + t1", "1 + t2", "1 + t1*t2", "1 + t2 + t1*t2"]);
    c2.ray_order = Some(rows(&[[1, 0, -1, 0, -1, 1], [0, -1, 0, 1, 1, -1]]));
    c2.ideal = reference(strings(&[
        "y1*y4 + y2*y3 - 1",
        "y2*y6 + y4*y5 - 1",
        "y1*y4*y6 + y2*y3*y6 + y3*y4*y5 - 1",
        "y1*y6 + y3*y5 - 1",
    ]));
    c2.ideal_match = IdealMatch::PolynomialSet;
    c2.degree = reference((2, 7));
    c2.saturation = reference(SaturationOutcome::Equal);
    c2.presentation = reference(strings(&[
        "y1 + y2*y3^2*y5 - 1",
        "y2 + y1*y4^2*y5 - 1",
        "y3 + y1*y4*y6 - 1",
        "y4 + y2*y3*y6 - 1",
        "y5 + y1*y2*y6^2 - 1",
        "y6 + y3*y4*y5 - 1",
    ]));
    c2.presentation_check = PresentationCheck::IdealEqual;
    e.charts.push(c2);
    e
}

fn pezzotope() -> CatalogEntry {
    let mut e = CatalogEntry::new("pezzotope", "E6 pezzotope, Minkowski sum of eleven Newton polytopes in R^4", 4);
    e.ray_order = Some(rows(&[
        [0, 0, 0, 0, -1, 0, 0, -1, -1, 1, 0, 0, -1, -1, 0],
        [0, 0, 0, -1, 0, 0, -1, 0, 1, 0, 1, -1, 0, 0, -1],
        [0, 0, -1, 1, 0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 1],
        [1, -1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    ]));
    e.published_sections = Some(strings(&[
        "1 + t1",
        "1 + t2",
        "1 + t2 + t1*t2",
        "1 + t3",
        "1 + t3 + t2*t3",
        "1 + t4",
        "1 + t4 + t2*t4 + t1*t2*t4",
        "1 + t3 + t3*t4 + t2*t4 + t2*t3 + t2*t4*t3",
        "1 + t3 + t3*t4 + t2*t4 + t2*t3 + t1*t2*t4 + t2*t3*t4",
        "1 + t3 + t2*t3 + t2*t4 + t3*t4 + t1*t2*t4 + t2*t3*t4 + t1*t2*t3*t4",
        "1 + t3 + t2*t3 + t2*t4 + t3*t4 + t1*t2*t3 + t1*t2*t4 + t2*t3*t4 + t1*t2*t3*t4",
    ]));
    e.f_vector = reference(vec![45, 90, 60, 15]);
    e.nef = reference(NefFact { dim: 11, ray_count: 11, lifts: None });
    // f8..f11 include the monomial t4.
    let mut c = ChartEntry::new(
        "main",
        &[
            "1 + t1",
            "1 + t2",
            "1 + t2 + t1*t2",
            "1 + t3",
            "1 + t3 + t2*t3",
            "1 + t4",
            "1 + t4 + t2*t4 + t1*t2*t4",
            "1 + t4 + t3 + t3*t4 + t2*t4 + t2*t3 + t2*t3*t4",
            "1 + t4 + t3 + t3*t4 + t2*t4 + t2*t3 + t1*t2*t4 + t2*t3*t4",
            "1 + t4 + t3 + t2*t3 + t2*t4 + t3*t4 + t1*t2*t4 + t2*t3*t4 + t1*t2*t3*t4",
            "1 + t4 + t3 + t2*t3 + t2*t4 + t3*t4 + t1*t2*t3 + t1*t2*t4 + t2*t3*t4 + t1*t2*t3*t4",
        ],
    );
    c.presentation = reference(strings(&[
        "y1 + y2*y5*y7*y13*y15 - 1",
        "y6 + y3*y7*y8*y12*y13 - 1",
        "y11 + y4*y5*y7*y8*y12*y13*y14*y15 - 1",
        "y2 + y1*y4*y8*y12*y14 - 1",
        "y7 + y1*y6*y9*y11*y14 - 1",
        "y12 + y2*y5*y6*y9*y11*y13*y14*y15 - 1",
        "y3 + y4*y5*y6*y14*y15 - 1",
        "y8 + y2*y6*y10*y11*y15 - 1",
        "y13 + y1*y4*y6*y10*y11*y12*y14*y15 - 1",
        "y4 + y2*y3*y9*y11*y13 - 1",
        "y9 + y4*y7*y10*y12*y15 - 1",
        "y14 + y2*y3*y7*y10*y11*y12*y13*y15 - 1",
        "y5 + y1*y3*y10*y11*y12 - 1",
        "y10 + y5*y8*y9*y13*y14 - 1",
        "y15 + y1*y3*y8*y9*y11*y12*y13*y14 - 1",
    ]));
    c.presentation_check = PresentationCheck::VanishesOnPhi;
    e.charts.push(c);
    e
}

pub fn perm3_m() -> Vec<Vec<i64>> {
    rows(&[
        [-1, -1, -1, -1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0],
        [0, -1, -1, 0, 0, 1, 0, -1, 1, 1, 1, -1, 0, 0],
        [0, 0, -1, -1, 1, 0, 0, -1, 1, 1, 0, 0, -1, 1],
        [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0],
        [1, 1, 1, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0],
        [0, 1, 1, 1, 0, 0, 0, 1, -1, -1, 0, 1, 1, 0],
        [0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0],
        [1, 1, 2, 2, -1, 0, 0, 1, 0, -1, 0, 0, 1, 0],
        [1, 2, 2, 2, 0, -1, 0, 2, 0, -1, 0, 1, 1, 0],
        [1, 2, 2, 2, -1, 0, 0, 2, 0, -1, 0, 1, 1, 0],
        [1, 2, 3, 2, -1, -1, 0, 2, -1, -2, 0, 1, 1, 0],
        [1, 2, 2, 2, 0, 0, 0, 2, 0, -1, 0, 1, 2, 0],
    ])
}

fn perm3() -> CatalogEntry {
    let mut e = CatalogEntry::new("perm3", "permutahedron Perm(3), convex hull of the permutations of (1,2,3,4)", 3);
    let mut verts = Vec::new();
    for a in 1..=4i64 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    let mut v = [a, b, c, d];
                    v.sort();
                    if v == [1, 2, 3, 4] {
                        verts.push(vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    e.vertices = Some(verts);
    let m = perm3_m();
    e.ray_order = Some(m[..3].to_vec());
    e.nef = reference(NefFact { dim: 11, ray_count: 37, lifts: None });
    e.published_sections = Some(strings(&[
        "1 + t1",
        "1 + t2",
        "1 + t3",
        "t1 + t2",
        "t2 + t3",
        "1 + t2 + t3",
        "t1 + t3 + t1*t3",
        "t1 + t2 + t1*t2 + t1*t3 + t2*t3",
        "t1 + t3 + t1*t2 + t1*t3 + t2*t3",
        "t1*t2 + t1*t3 + t2*t3, + t1*t2*t3",
        "t1 + t2 + t3 + t1*t2 + t1*t3 + t2*t3 + t3^2",
    ]));
    let mut c = ChartEntry::new(
        "main",
        &[
            "1 + t1",
            "1 + t2",
            "1 + t3",
            "t1 + t2",
            "t2 + t3",
            "1 + t2 + t3",
            "t1 + t3 + t1*t3",
            "t1 + t2 + t1*t2 + t1*t3 + t2*t3",
            "t1 + t3 + t1*t2 + t1*t3 + t2*t3",
            "t1*t2 + t1*t3 + t2*t3 + t1*t2*t3",
            "t1 + t2 + t3 + t1*t2 + t1*t3 + t2*t3 + t3^2",
        ],
    );
    c.m = reference(m);
    c.saturation = reference(SaturationOutcome::ResourceLimit { max_pairs: 2000, max_terms: 20000, max_steps: 5000 });
    e.charts.push(c);
    e
}

fn p121() -> CatalogEntry {
    let mut e = CatalogEntry::new("p121", "triangle (0,0),(0,1),(2,0); weighted projective plane P(1,2,1)", 2);
    e.vertices = Some(rows(&[[0, 0], [0, 1], [2, 0]]));
    e.ray_order = Some(rows(&[[1, 0, -1], [0, 1, -2]]));
    e.expected_error = reference("NotSmoothFan".to_string());
    e
}

fn diamond() -> CatalogEntry {
    let mut e = CatalogEntry::new("diamond", "diamond (1,0),(0,1),(-1,0),(0,-1); class group with torsion", 2);
    e.vertices = Some(rows(&[[1, 0], [0, 1], [-1, 0], [0, -1]]));
    e.ray_order = Some(rows(&[[1, -1, -1, 1], [1, 1, -1, -1]]));
    e.expected_error = reference("Torsion".to_string());
    e
}
