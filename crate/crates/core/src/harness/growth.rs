use serde_json::{json, Value};

use super::classify::SystemSummary;
use super::config::{load_system, ExperimentConfig};
use super::emit::Report;
use super::SCHEMA_VERSION;
use crate::error::Result;
use crate::roots::depth::DEFAULT_ROOT_GUARD;
use crate::roots::length::{DEFAULT_SPHERE_GUARD, RADIUS_GUARD};
use crate::system::Kind;
use crate::ExactSystem;

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub system: SystemSummary,
    pub radius: u32,
    /// `card(W_r)` for `r = 0..=radius` (fewer when truncated).
    pub sphere_sizes: Vec<usize>,
    /// `card(W_R)^(1/R)` at the largest radius reached.
    pub omega_estimate: f64,
    pub depth_bound: u32,
    /// `card(Φ⁺(r))` for `r = 1..=depth_bound` (fewer when truncated).
    pub roots_per_depth: Vec<usize>,
    pub spheres_truncated: bool,
    pub roots_truncated: bool,
    /// Affine: the counts stay bounded by those of the first half of the
    /// range. Indefinite: the last count exceeds the first. `None` for
    /// finite systems.
    pub growth_consistent: Option<bool>,
}

impl GrowthReport {
    pub fn truncated(&self) -> bool {
        self.spheres_truncated || self.roots_truncated
    }
}

pub fn cmd_growth(config: &ExperimentConfig) -> Result<GrowthReport> {
    config.validate()?;
    let (_, sys) = load_system(config.require_input()?)?;
    growth_of(&sys, config.radius, config.depth_bound)
}

pub fn growth_of(sys: &ExactSystem, radius: u32, depth_bound: u32) -> Result<GrowthReport> {
    growth_guarded(sys, radius, depth_bound, DEFAULT_SPHERE_GUARD, DEFAULT_ROOT_GUARD)
}

/// Like [`growth_of`] with explicit guards; exceeding one yields a partial,
/// truncated report rather than an error.
pub fn growth_guarded(
    sys: &ExactSystem,
    radius: u32,
    depth_bound: u32,
    sphere_guard: usize,
    root_guard: usize,
) -> Result<GrowthReport> {
    let (system, _) = SystemSummary::of(sys)?;
    let balls = sys.ball_sizes_unguarded(radius.min(RADIUS_GUARD), sphere_guard);
    let (layers, roots_truncated) = sys.enumerate_by_depth_partial(depth_bound, root_guard);
    let counts = layers.counts();
    let growth_consistent = match system.kind {
        Kind::Finite => None,
        _ if counts.len() < 2 => None,
        Kind::Affine => {
            let half = counts.len().div_ceil(2);
            let early = counts[..half].iter().max().copied().unwrap_or(0);
            Some(counts[half..].iter().all(|&c| c <= early))
        }
        Kind::Indefinite => Some(counts[counts.len() - 1] > counts[0]),
    };
    Ok(GrowthReport {
        system,
        radius,
        omega_estimate: balls.growth_estimate,
        spheres_truncated: balls.truncated || radius > RADIUS_GUARD,
        sphere_sizes: balls.sphere_sizes,
        depth_bound,
        roots_per_depth: counts,
        roots_truncated,
        growth_consistent,
    })
}

impl Report for GrowthReport {
    fn to_json(&self) -> Value {
        let mut records: Vec<Value> = self
            .sphere_sizes
            .iter()
            .enumerate()
            .map(|(r, c)| json!({ "series": "sphere", "r": r, "count": c }))
            .collect();
        records.extend(
            self.roots_per_depth
                .iter()
                .enumerate()
                .map(|(r, c)| json!({ "series": "roots", "r": r + 1, "count": c })),
        );
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "growth",
            "system": self.system.json(),
            "config": { "radius": self.radius, "depth_bound": self.depth_bound },
            "sphere_sizes": self.sphere_sizes,
            "omega_estimate": self.omega_estimate,
            "roots_per_depth": self.roots_per_depth,
            "truncated": { "spheres": self.spheres_truncated, "roots": self.roots_truncated },
            "growth_consistent": self.growth_consistent,
            "records": records,
        })
    }

    fn csv_header(&self) -> Vec<String> {
        ["series", "r", "count"].map(String::from).to_vec()
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let spheres = self
            .sphere_sizes
            .iter()
            .enumerate()
            .map(|(r, c)| vec!["sphere".into(), r.to_string(), c.to_string()]);
        let roots = self
            .roots_per_depth
            .iter()
            .enumerate()
            .map(|(r, c)| vec!["roots".into(), (r + 1).to_string(), c.to_string()]);
        spheres.chain(roots).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::Label;

    #[test]
    fn affine_counts_are_flat() {
        let sys = ExactSystem::cyclic(&[Label::Finite(3); 3]).unwrap();
        let g = growth_of(&sys, 4, 12).unwrap();
        assert_eq!(g.sphere_sizes[..2], [1, 3]);
        assert_eq!(g.roots_per_depth, vec![3; 12]);
        assert_eq!(g.growth_consistent, Some(true));
        assert!(!g.truncated());
    }

    #[test]
    fn guards_truncate() {
        let sys = ExactSystem::cyclic(&[Label::Finite(3), Label::Finite(3), Label::Finite(4)]).unwrap();
        let g = growth_guarded(&sys, 8, 12, 20, 30).unwrap();
        assert!(g.spheres_truncated && g.roots_truncated);
        assert!(g.sphere_sizes.len() < 9);
        assert!(g.roots_per_depth.len() < 12);
        assert!(g.roots_per_depth.iter().sum::<usize>() <= 30);
    }
}
