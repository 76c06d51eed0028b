use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use ndarray::Array2;

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::shift::{script_d_check, shift_commutator_check, shift_relation_check, weighted_boost_commutator};
use crate::algebra::su22;
use crate::algebra::superop::SuperOp;
use crate::fock::{self, LadderKind, Mode};
use crate::monopole::field::{fit_line, FieldStrength};
use crate::monopole::velocity::{self, VelocityFamily};
use crate::monopole::{associator, commutators, ucomm};
use crate::ncspace::{build_coordinates, verify_coordinate_algebra, CoordinateResiduals};
use crate::residual::{relative, Comparison, Window};
use crate::sector::{inner_product, symmetrized_radius, SectorVector};
use crate::{Error, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Fock,
    Coords,
    Su22,
    Radial,
    Velocity,
    Monopole,
    All,
    Errata,
    Scaling,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["fock", "coords", "su22", "radial", "velocity", "monopole", "all", "errata", "scaling"];

    pub fn name(self) -> &'static str {
        Self::NAMES[self as usize]
    }

    /// Whether a record filed under `record` runs in this suite.
    pub fn selects(self, record: &IdentityRecord) -> bool {
        match self {
            Suite::All => !record.errata,
            Suite::Errata => record.errata,
            Suite::Scaling => !record.errata && record.is_per_kappa() && record.suite != Suite::Fock,
            s => !record.errata && record.suite == s,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        const ALL: [Suite; 9] = [
            Suite::Fock,
            Suite::Coords,
            Suite::Su22,
            Suite::Radial,
            Suite::Velocity,
            Suite::Monopole,
            Suite::All,
            Suite::Errata,
            Suite::Scaling,
        ];
        ALL.into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// What a per-κ check needs prebuilt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Needs {
    Ops,
    Vel,
    Field,
}

/// Operators of one sector, built once per run.
pub struct SectorCtx {
    pub alg: Algebra,
    pub vel: Option<VelocityFamily>,
    pub field: Option<FieldStrength>,
}

impl SectorCtx {
    pub fn build(alg: Algebra, needs: Needs) -> Self {
        let vel = (needs >= Needs::Vel).then(|| velocity::build_velocities(&alg));
        let field = match (&vel, needs) {
            (Some(v), Needs::Field) => Some(crate::monopole::field_strength(&alg, v)),
            _ => None,
        };
        Self { alg, vel, field }
    }

    pub fn vel(&self) -> &VelocityFamily {
        self.vel.as_ref().expect("velocities are prepared for this record")
    }

    pub fn field(&self) -> &FieldStrength {
        self.field.as_ref().expect("field strength is prepared for this record")
    }
}

/// Inputs of κ-independent checks.
pub struct GlobalCtx<'a> {
    pub lambda: f64,
    pub n_max: usize,
    /// Prepared sectors by κ; non-empty sectors only.
    pub sectors: &'a BTreeMap<i32, SectorCtx>,
}

pub type SectorFn = fn(&SectorCtx, &Window) -> Option<Comparison>;
pub type GlobalFn = fn(&GlobalCtx) -> Option<Comparison>;

#[derive(Clone, Copy)]
pub enum Check {
    /// Evaluated once per κ on a guarded window; `kappa_zero` restricts it to κ = 0.
    Sector { needs: Needs, kappa_zero: bool, run: SectorFn },
    /// Evaluated once per run.
    Global { needs: Option<Needs>, run: GlobalFn },
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// The relation as a formula.
    pub paper_ref: &'static str,
    pub suite: Suite,
    /// Number of quadratic factors in the longest word; the default guard.
    pub word_length: usize,
    /// `None` uses the run-wide default.
    pub tolerance: Option<f64>,
    /// A printed variant that is expected to fail.
    pub errata: bool,
    pub check: Check,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .field("word_length", &self.word_length)
            .field("tolerance", &self.tolerance)
            .field("errata", &self.errata)
            .finish()
    }
}

impl IdentityRecord {
    pub fn is_per_kappa(&self) -> bool {
        matches!(self.check, Check::Sector { .. })
    }

    pub fn needs(&self) -> Option<Needs> {
        match self.check {
            Check::Sector { needs, .. } => Some(needs),
            Check::Global { needs, .. } => needs,
        }
    }
}

fn sector(
    suite: Suite,
    id: &'static str,
    paper_ref: &'static str,
    word_length: usize,
    tolerance: Option<f64>,
    needs: Needs,
    run: SectorFn,
) -> IdentityRecord {
    IdentityRecord {
        id,
        paper_ref,
        suite,
        word_length,
        tolerance,
        errata: false,
        check: Check::Sector { needs, kappa_zero: false, run },
    }
}

fn global(
    suite: Suite,
    id: &'static str,
    paper_ref: &'static str,
    tolerance: Option<f64>,
    needs: Option<Needs>,
    run: GlobalFn,
) -> IdentityRecord {
    IdentityRecord {
        id,
        paper_ref,
        suite,
        word_length: 0,
        tolerance,
        errata: false,
        check: Check::Global { needs, run },
    }
}

fn errata(mut r: IdentityRecord) -> IdentityRecord {
    r.errata = true;
    r.suite = Suite::Errata;
    r
}

fn kappa_zero(mut r: IdentityRecord) -> IdentityRecord {
    if let Check::Sector { kappa_zero, .. } = &mut r.check {
        *kappa_zero = true;
    }
    r
}

fn coords(n_max: usize, lambda: f64) -> CoordinateResiduals {
    let nc = build_coordinates(&fock::build_basis(n_max), lambda).expect("lambda validated by the runner");
    verify_coordinate_algebra(&nc)
}

fn dagger(m: &Array2<C64>) -> Array2<C64> {
    m.t().mapv(|z| z.conj())
}

/// Deterministic dense test vector on a sector.
fn probe(s: crate::sector::MonopoleSector, seed: f64) -> SectorVector {
    let data = (0..s.dim())
        .map(|i| {
            let t = i as f64 + seed;
            C64::new((1.3 * t).sin(), (0.7 * t + seed).cos())
        })
        .collect();
    SectorVector::from_vec(s, data).expect("length matches sector")
}

fn u_lists(v: &VelocityFamily) -> (Vec<&SuperOp>, Vec<&SuperOp>) {
    let u = v.u.iter().flatten().collect();
    let ud = v.udag.iter().flatten().collect();
    (u, ud)
}

/// The full registry in declaration order.
pub fn registry() -> Vec<IdentityRecord> {
    use Suite::*;
    vec![
        // fock
        global(Fock, "fock-dim", "dim F = (n_max+1)(n_max+2)/2", Some(0.0), None, |g| {
            let n = g.n_max;
            let dim = fock::build_basis(n).dim();
            Some(Comparison::exact((dim as f64 - ((n + 1) * (n + 2) / 2) as f64).abs()))
        }),
        global(Fock, "fock-ccr", "[a_α, a⁺_β] = δ_αβ on levels n < n_max", Some(1e-14), None, |g| {
            let b = fock::build_basis(g.n_max);
            let p = fock::interior_projector(&b, 1);
            let mut worst: f64 = 0.0;
            for al in Mode::BOTH {
                for be in Mode::BOTH {
                    let a = fock::ladder(&b, al, LadderKind::Annihilate).matrix;
                    let c = fock::ladder(&b, be, LadderKind::Create).matrix;
                    let lhs = (a.dot(&c) - c.dot(&a)).dot(&p.matrix);
                    let rhs = if al == be { p.matrix.clone() } else { Array2::zeros(p.matrix.dim()) };
                    worst = worst.max(relative(&lhs, &rhs));
                }
            }
            Some(Comparison::exact(worst))
        }),
        global(Fock, "fock-adjoint", "a⁺_α = (a_α)†", Some(0.0), None, |g| {
            let b = fock::build_basis(g.n_max);
            let worst = Mode::BOTH
                .into_iter()
                .map(|m| {
                    let a = fock::ladder(&b, m, LadderKind::Annihilate).matrix;
                    let c = fock::ladder(&b, m, LadderKind::Create).matrix;
                    relative(&dagger(&a), &c)
                })
                .fold(0.0, f64::max);
            Some(Comparison::exact(worst))
        }),
        global(Fock, "fock-number", "a⁺₁a₁ + a⁺₂a₂ = N", Some(1e-14), None, |g| {
            let b = fock::build_basis(g.n_max);
            let mut sum = Array2::zeros((b.dim(), b.dim()));
            for m in Mode::BOTH {
                let a = fock::ladder(&b, m, LadderKind::Annihilate).matrix;
                sum = sum + dagger(&a).dot(&a);
            }
            Some(Comparison::exact(relative(&sum, &fock::number_operator(&b))))
        }),
        sector(Fock, "sector-radius", "½(rΨ + Ψr) = r̂Ψ, r̂ = λ(n+1+κ/2)", 0, Some(1e-14), Needs::Ops, |c, _| {
            let s = *c.alg.sector();
            let psi = probe(s, 0.25);
            let lhs = symmetrized_radius(&psi);
            let rhs = c.alg.r_hat().apply(&psi);
            let d: f64 = lhs.data().iter().zip(rhs.data()).map(|(a, b)| (a - b).norm_sqr()).sum();
            Some(Comparison::exact(d.sqrt() / 1f64.max(rhs.norm_sqr().sqrt())))
        }),
        sector(Fock, "sector-inner-product", "(Φ,Ψ) = conj (Ψ,Φ), (Ψ,Ψ) > 0", 0, Some(1e-14), Needs::Ops, |c, _| {
            let s = *c.alg.sector();
            let (phi, psi) = (probe(s, 0.5), probe(s, 2.0));
            let a = inner_product(&phi, &psi).ok()?;
            let b = inner_product(&psi, &phi).ok()?;
            let n = inner_product(&psi, &psi).ok()?;
            let scale = 1f64.max(a.norm()).max(n.norm());
            let mut res = (a - b.conj()).norm() / scale + n.im.abs() / scale;
            if n.re <= 0.0 {
                res = f64::INFINITY;
            }
            Some(Comparison::exact(res))
        }),
        sector(Fock, "sector-weighted-adjoint", "(Φ, OΨ) = (O†Φ, Ψ), O† = W⁻¹OᴴW", 0, Some(1e-13), Needs::Ops, |c, _| {
            let s = *c.alg.sector();
            let (phi, psi) = (probe(s, 0.5), probe(s, 3.0));
            let mut worst: f64 = 0.0;
            for op in [c.alg.ab(0, 1), c.alg.s(0, 1), c.alg.s(2, 5)] {
                let lhs = inner_product(&phi, &op.apply(&psi)).ok()?;
                let rhs = inner_product(&op.weighted_adjoint().apply(&phi), &psi).ok()?;
                worst = worst.max((lhs - rhs).norm() / 1f64.max(lhs.norm()));
            }
            Some(Comparison::exact(worst))
        }),
        // coords
        global(Coords, "coords-commutator", "[x_i, x_j] = 2iλ ε_ijk x_k", Some(1e-13), None, |g| {
            Some(Comparison::exact(coords(g.n_max, g.lambda).commutator))
        }),
        global(Coords, "coords-radius", "[x_i, r] = 0", Some(1e-13), None, |g| {
            Some(Comparison::exact(coords(g.n_max, g.lambda).radius))
        }),
        global(Coords, "coords-square", "x_i x_i = r² − λ²", Some(1e-13), None, |g| {
            Some(Comparison::exact(coords(g.n_max, g.lambda).square))
        }),
        // su22
        global(Su22, "su22-matrix-reality", "S_AB⁺ = Γ S_AB Γ", Some(1e-15), None, |_| {
            Some(Comparison::exact(su22::reality_residual(su22::matrix, 1.0)))
        }),
        global(
            Su22,
            "su22-matrix-closure",
            "[S_AB, S_CD] = i(η_AC S_BD − η_BC S_AD − η_AD S_BC + η_BD S_AC)",
            Some(1e-15),
            None,
            |_| Some(Comparison::exact(su22::algebra_residual(su22::matrix, &su22::eta()))),
        ),
        sector(
            Su22,
            "su22-closure",
            "[Ŝ_AB, Ŝ_CD] = i(η_AC Ŝ_BD − η_BC Ŝ_AD − η_AD Ŝ_BC + η_BD Ŝ_AC)",
            2,
            Some(1e-12),
            Needs::Ops,
            |c, w| Some(c.alg.closure(w, &su22::eta())),
        ),
        sector(Su22, "su22-central", "(Ĉ+2)Ψ = κΨ", 1, Some(1e-14), Needs::Ops, |c, w| {
            Some(c.alg.central_charge(w))
        }),
        sector(Su22, "su22-pairing", "[Â_a, Γ_bb Â⁺_b] = δ_ab", 1, Some(1e-13), Needs::Ops, |c, w| {
            Some(c.alg.canonical_pairing(w))
        }),
        sector(
            Su22,
            "su22-ladder",
            "[â_α, â⁺_β] = δ_αβ, [b̂_α, b̂⁺_β] = −δ_αβ, [left, right] = 0",
            1,
            Some(1e-13),
            Needs::Ops,
            |c, w| Some(c.alg.ladder_relations(w)),
        ),
        sector(Su22, "su22-rotations-radius", "[Ŝ_ab, r̂] = [Ŝ₀₅, r̂] = 0", 1, Some(1e-13), Needs::Ops, |c, w| {
            Some(c.alg.rotations_commute_with_radius(w))
        }),
        sector(Su22, "su22-rotations-adjoint", "Ŝ_ab† = Ŝ_ab, Ŝ₀₅† = Ŝ₀₅", 2, Some(1e-12), Needs::Ops, |c, w| {
            Some(c.alg.rotations_self_adjoint(w))
        }),
        sector(Su22, "su22-radius-forms", "r̂ = λŜ₀₅ = (λ/2)(â⁺â + b̂⁺b̂)", 1, Some(1e-13), Needs::Ops, |c, w| {
            Some(c.alg.radius_forms(w))
        }),
        // radial
        sector(Radial, "UF-r", "f(r̂)Û = Ûf(r̂+λ), f(r̂)Û† = Û†f(r̂−λ), f = r̂", 1, Some(1e-11), Needs::Vel, |c, w| {
            let (u, ud) = u_lists(c.vel());
            Some(shift_relation_check(&c.alg, &u, &ud, &RadialFunction::r(), w))
        }),
        sector(Radial, "UF-r2", "f(r̂)Û = Ûf(r̂+λ), f(r̂)Û† = Û†f(r̂−λ), f = r̂²", 1, Some(1e-11), Needs::Vel, |c, w| {
            let (u, ud) = u_lists(c.vel());
            Some(shift_relation_check(&c.alg, &u, &ud, &RadialFunction::power(2), w))
        }),
        sector(Radial, "UF-inv-r", "f(r̂)Û = Ûf(r̂+λ), f(r̂)Û† = Û†f(r̂−λ), f = 1/r̂", 1, Some(1e-11), Needs::Vel, |c, w| {
            let (u, ud) = u_lists(c.vel());
            Some(shift_relation_check(&c.alg, &u, &ud, &RadialFunction::inv_r(), w))
        }),
        sector(
            Radial,
            "zeta-w-r",
            "[ŵ_a, f] = ½λ²(Δ²f)ŵ_a + λ(δf)ζ̂_a and ζ̂ ↔ ŵ, f = r̂",
            1,
            Some(1e-11),
            Needs::Ops,
            |c, w| Some(shift_commutator_check(&c.alg, &RadialFunction::r(), w)),
        ),
        sector(
            Radial,
            "zeta-w-r2",
            "[ŵ_a, f] = ½λ²(Δ²f)ŵ_a + λ(δf)ζ̂_a and ζ̂ ↔ ŵ, f = r̂²",
            1,
            Some(1e-11),
            Needs::Ops,
            |c, w| Some(shift_commutator_check(&c.alg, &RadialFunction::power(2), w)),
        ),
        sector(
            Radial,
            "zeta-w-inv-r",
            "[ŵ_a, f] = ½λ²(Δ²f)ŵ_a + λ(δf)ζ̂_a and ζ̂ ↔ ŵ, f = 1/r̂",
            1,
            Some(1e-11),
            Needs::Ops,
            |c, w| Some(shift_commutator_check(&c.alg, &RadialFunction::inv_r(), w)),
        ),
        sector(Radial, "script-d", "𝒟 r̂⁻¹ = 0", 0, Some(1e-14), Needs::Ops, |c, _| {
            Some(script_d_check(&c.alg, &RadialFunction::inv_r()))
        }),
        sector(
            Radial,
            "weighted-boost",
            "ε_ijk[fŵ_i, fŵ_j] = 4i f(𝒟f) ε_ijk Ŝ_ij + 4iλ f(δf) Ŝ_4k(Ĉ+2), f = 1/r̂",
            2,
            Some(1e-11),
            Needs::Ops,
            |c, w| Some(weighted_boost_commutator(&c.alg, &RadialFunction::inv_r(), w)),
        ),
        // velocity
        sector(Velocity, "V-hermiticity", "V̂_a† = V̂_a, Ṽ_a† = Ṽ_a, (Û_αβ)† = Û†_βα", 2, Some(1e-12), Needs::Vel, |c, w| {
            Some(c.vel().hermiticity(w))
        }),
        sector(Velocity, "V-structural", "V̂_a = r̂⁻¹Ŝ₀ₐ, Ṽ_k = r̂⁻¹Ŝ_k5, Ṽ₄ = −r̂⁻¹Ŝ₄₅", 1, Some(1e-13), Needs::Vel, |c, w| {
            Some(c.vel().structural_forms(&c.alg, w))
        }),
        sector(
            Velocity,
            "V-reconstruction",
            "V̂_k = (i/2)σᵏ_αβ(Û_αβ − Û†_βα), V̂₄ = ½(Û_αα + Û†_αα)",
            1,
            Some(1e-13),
            Needs::Vel,
            |c, w| Some(c.vel().reconstruction(w)),
        ),
        sector(Velocity, "V-level-shifts", "Û: n → n+1, Û†: n → n−1, V̂: n → n±1", 0, Some(0.0), Needs::Vel, |c, _| {
            Some(c.vel().level_shifts())
        }),
        sector(
            Velocity,
            "V-rotation-flow",
            "e^{−iωŜ₀₅} V̂_a e^{iωŜ₀₅} = cos ω V̂_a + sin ω Ṽ_a, ω = 0.7",
            1,
            Some(1e-11),
            Needs::Vel,
            |c, w| Some(velocity::rotation_flow(c.vel(), 0.7, w)),
        ),
        sector(Velocity, "UU-vanish", "[Û_αβ, Û_γδ] = [Û†_αβ, Û†_γδ] = 0", 2, Some(1e-13), Needs::Vel, |c, w| {
            Some(ucomm::uu_vanish(c.vel(), w))
        }),
        sector(
            Velocity,
            "UU*0",
            "[Û,Û†] = (r̂²−λ²)⁻¹[â⁺b̂, b̂⁺â] + λ(r̂(r̂²−λ²))⁻¹{â⁺b̂, b̂⁺â}",
            2,
            None,
            Needs::Vel,
            |c, w| Some(ucomm::uu_star0(&c.alg, c.vel(), w)),
        ),
        sector(
            Velocity,
            "UU*1",
            "[â⁺_α b̂_β, b̂⁺_δ â_γ] = −â⁺_α â_γ δ_βδ − b̂⁺_δ b̂_β δ_γα",
            2,
            Some(1e-12),
            Needs::Vel,
            |c, w| Some(ucomm::uu_star1(&c.alg, w)),
        ),
        sector(Velocity, "UU*2", "λ(r̂(r̂²−λ²))⁻¹{â⁺b̂, b̂⁺â} = λ(r̂²−λ²)⁻¹((r̂−λ)ÛÛ† + (r̂+λ)Û†Û)", 2, None, Needs::Vel, |c, w| {
            Some(ucomm::uu_star2(&c.alg, c.vel(), w))
        }),
        sector(Velocity, "UU*3", "[Û,Û†] = −(r̂²−λ²)⁻¹X − λ²(r̂²−λ²)⁻¹[Û,Û†] + λr̂(r̂²−λ²)⁻¹{Û,Û†}", 2, None, Needs::Vel, |c, w| {
            Some(ucomm::uu_star3(&c.alg, c.vel(), w))
        }),
        sector(
            Velocity,
            "UU*4",
            "[Û_αβ, Û†_γδ] = −r̂⁻²X + (λ/r̂){Û_αβ, Û†_γδ}, X = â⁺_α â_γ δ_βδ + b̂⁺_δ b̂_β δ_γα",
            2,
            Some(1e-11),
            Needs::Vel,
            |c, w| Some(ucomm::uu_star(&c.alg, c.vel(), w, 1.0)),
        ),
        sector(
            Velocity,
            "UU-order",
            "Û†_γδ Û_αβ = Q̂ Û_αβ Û†_γδ + X_αβγδ/(r̂(r̂+λ)), Q̂ = (r̂−λ)/(r̂+λ)",
            2,
            None,
            Needs::Vel,
            |c, w| Some(ucomm::q_ordering(&c.alg, c.vel(), w)),
        ),
        sector(Velocity, "Q-bounds", "|Q̂ − 1| ≤ 2λ/r̂, 0 ≤ Q̂ < 1, Q̂ increasing", 0, Some(0.0), Needs::Ops, |c, _| {
            Some(ucomm::q_bounds(&c.alg))
        }),
        sector(
            Velocity,
            "VV-ij",
            "[V̂_i,V̂_j] = −(i/r̂²)Ŝ_ij + (iλ/2r̂)({Ṽ_i,V̂_j} − {Ṽ_j,V̂_i}) = [Ṽ_i,Ṽ_j]",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_ij(&c.alg, c.vel(), w)),
        ),
        sector(
            Velocity,
            "VV-k4",
            "[V̂_k,V̂₄] = −(i/r̂²)Ŝ_k4 + (iλ/2r̂)({Ṽ_k,V̂₄} + {V̂_k,Ṽ₄}) = −[Ṽ_k,Ṽ₄]",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_k4(&c.alg, c.vel(), w)),
        ),
        sector(
            Velocity,
            "VV-dual-ij",
            "[V̂_i,Ṽ_j] = −(i/λr̂)δ_ij + (iλ/2r̂)({Ṽ_i,Ṽ_j} + {V̂_i,V̂_j}) = −[Ṽ_i,V̂_j]",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_dual_ij(&c.alg, c.vel(), w)),
        ),
        sector(
            Velocity,
            "VV-dual-k4",
            "[V̂_k, Ṽ₄] = +(iλ/2r̂)({Ṽ_k, Ṽ₄} − {V̂_k, V̂₄}) = [Ṽ_k, V̂₄]",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_dual_k4(&c.alg, c.vel(), w, 1.0)),
        ),
        sector(
            Velocity,
            "VV-dual-44",
            "[V̂₄,Ṽ₄] = i/(λr̂) − (iλ/r̂)(V̂₄² + Ṽ₄²)",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_dual_44(&c.alg, c.vel(), w)),
        ),
        sector(
            Velocity,
            "VV-contracted",
            "σⁱ_αβ σʲ*_γδ [Û_αβ, Û†_γδ], σᵏ_αβ [Û_αβ, Û†_γγ], [Û_αα, Û†_γγ] against the velocity commutators",
            4,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_contracted(c.vel(), w)),
        ),
        sector(
            Velocity,
            "VV-expansions",
            "[Û_αα, Û†_γγ] = −2/(λr̂) + (2λ/r̂)(V̂₄² + Ṽ₄²) and the σ-contracted expansions",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::contracted_expansions(&c.alg, c.vel(), w)),
        ),
        // monopole
        sector(
            Monopole,
            "comVV",
            "[V̂_i, V̂_j] = −iλ(κ/2) ε_ijk Ŝ_k4 / (r̂(r̂²−λ²))",
            2,
            None,
            Needs::Field,
            |c, w| Some(c.field().closed_form(&c.alg, w)),
        ),
        sector(
            Monopole,
            "comVV-SO4",
            "[V̂_a, V̂_b] = −iλ(κ/2) ½ε_abcd Ŝ_cd / (r̂(r̂²−λ²))",
            2,
            None,
            Needs::Field,
            |c, w| Some(c.field().so4_form(&c.alg, w, 0.5)),
        ),
        sector(Monopole, "charge", "fitted coefficient of [V̂₁,V̂₂] on −iλŜ₃₄/(r̂(r̂²−λ²)) = κ/2", 2, Some(1e-8), Needs::Field, |c, w| {
            let (fit, excl) = c.field().charge_fit(&c.alg, w);
            let mut out = Comparison::exact((fit - c.alg.sector().kappa() as f64 / 2.0).abs());
            out.excluded = excl.excluded;
            Some(out)
        }),
        kappa_zero(sector(Monopole, "F-flat", "κ = 0: [V̂_i, V̂_j] = 0", 2, Some(1e-11), Needs::Field, |c, w| {
            Some(c.field().flat(w))
        })),
        sector(Monopole, "F-antisymmetry", "F̂_ab = −F̂_ba", 2, Some(0.0), Needs::Field, |c, w| {
            Some(c.field().antisymmetry(w))
        }),
        sector(Monopole, "G-symmetry", "Ĝ_ab = Ĝ_ba, [V̂_a, Ṽ_b] = iĜ_ab", 2, Some(1e-11), Needs::Field, |c, w| {
            Some(c.field().g_symmetry(w))
        }),
        sector(Monopole, "F-norm", "‖F̂₁₂‖_n = |κ|/(2r̂(r̂+λ))", 2, None, Needs::Field, |c, w| {
            Some(c.field().norm_law(&c.alg, w))
        }),
        sector(Monopole, "F-decay", "‖F̂₁₂‖/‖Ŝ₃₄‖ ∝ r̂⁻³ (fitted slope −3)", 2, Some(0.1), Needs::Field, |c, w| {
            if c.alg.sector().kappa() == 0 {
                return None;
            }
            let slope = c.field().decay_slope(&c.alg, w.guard)?;
            Some(Comparison::exact((slope + 3.0).abs()))
        }),
        sector(Monopole, "VVV", "ε_ijk[V̂_i, [V̂_j, V̂_k]] = 0", 3, None, Needs::Vel, |c, w| {
            Some(associator::associator(c.vel(), w))
        }),
        sector(Monopole, "VVV-baseline", "ε_ijk[Ŝ₀ᵢ, [Ŝ₀ⱼ, Ŝ₀ₖ]] = 0", 3, Some(1e-12), Needs::Ops, |c, w| {
            Some(associator::baseline(&c.alg, w))
        }),
        sector(
            Monopole,
            "VVV-first-line",
            "ε_ijk[V̂_i, [V̂_j, V̂_k]] = Σ_i [V̂_i, −iλκ Ŝ_i4/(r̂(r̂²−λ²))]",
            3,
            None,
            Needs::Vel,
            |c, w| Some(associator::associator_first_line(&c.alg, c.vel(), w)),
        ),
        sector(
            Monopole,
            "VVV-radial",
            "(λκ/2)Σ_i [V̂_i, P]Ŝ_i4 = (3iλκ/2) P V̂₄",
            3,
            None,
            Needs::Vel,
            |c, w| Some(associator::radial_part(&c.alg, c.vel(), w)),
        ),
        sector(
            Monopole,
            "VVV-rotation",
            "P Σ_i [V̂_i, Ŝ_i4] = −3i P V̂₄",
            3,
            None,
            Needs::Vel,
            |c, w| Some(associator::rotation_part(&c.alg, c.vel(), w)),
        ),
        sector(
            Monopole,
            "VVV-radial-shifted",
            "radial part through shifted denominators D₋, D₀, D₊",
            3,
            None,
            Needs::Ops,
            |c, w| Some(associator::radial_part_shifted(&c.alg, w)),
        ),
        sector(
            Monopole,
            "VV-chain",
            "ε_ijk[V̂_i, V̂_j] = ¼εσⁱσʲ([Û,Û†] − [Û,Û†]) = −iλ(Ĉ+2)PŜ_k4",
            2,
            None,
            Needs::Vel,
            |c, w| Some(associator::contraction_chain(&c.alg, c.vel(), w)),
        ),
        global(Monopole, "fierz", "ε_ijk σⁱ_αβ σʲ_δγ = i(σᵏ_αγ δ_δβ − σᵏ_δβ δ_αγ)", Some(1e-15), None, |_| {
            Some(Comparison::exact(associator::fierz(false)))
        }),
        global(
            Monopole,
            "charge-linearity",
            "charge(κ) = κ/2: fitted slope 1/2, intercept 0",
            Some(1e-8),
            Some(Needs::Field),
            |g| {
                let pts: Vec<(f64, f64)> = g
                    .sectors
                    .iter()
                    .filter_map(|(&k, c)| {
                        let w = Window::new(*c.alg.sector(), 2);
                        (!w.is_empty()).then(|| (k as f64, c.field().charge_fit(&c.alg, &w).0))
                    })
                    .collect();
                let (slope, intercept) = fit_line(&pts)?;
                Some(Comparison::exact((slope - 0.5).abs().max(intercept.abs())))
            },
        ),
        // printed variants
        errata(global(Su22, "printed-matrix-reality", "S_AB⁺ = −Γ S_AB Γ", Some(1e-15), None, |_| {
            Some(Comparison::exact(su22::reality_residual(su22::matrix, -1.0)))
        })),
        errata(global(
            Su22,
            "printed-matrix-closure",
            "closure with η = diag(1,1,1,1,−1,−1) and the listed S₄₅",
            Some(1e-15),
            None,
            |_| Some(Comparison::exact(su22::algebra_residual(su22::printed_matrix, &su22::printed_eta()))),
        )),
        errata(sector(Velocity, "printed-V-normalization", "V̂_a = 2r̂⁻¹Ŝ₀ₐ", 1, None, Needs::Vel, |c, w| {
            Some(velocity::printed_normalization(c.vel(), &c.alg, w))
        })),
        errata(sector(
            Velocity,
            "printed-V-rotation-flow",
            "e^{iωŜ₀₅} V̂_a e^{−iωŜ₀₅} = cos ω V̂_a + sin ω Ṽ_a, ω = 0.7",
            1,
            Some(1e-11),
            Needs::Vel,
            |c, w| Some(velocity::printed_rotation_flow(c.vel(), 0.7, w)),
        )),
        errata(sector(Velocity, "printed-UU*", "[Û_αβ, Û†_γδ] = −r̂⁻²X + (λ/r̂){Û_αβ, Û†_γδ}, X = â⁺_α â_γ δ_βδ − b̂⁺_δ b̂_β δ_γα", 2, Some(1e-11), Needs::Vel, |c, w| {
            Some(ucomm::uu_star(&c.alg, c.vel(), w, -1.0))
        })),
        errata(sector(
            Velocity,
            "printed-UU-order",
            "Û†_γδ Û_αβ = Q̂ Û_αβ Û†_γδ − X_αβγδ/(r̂²(r̂+λ))",
            2,
            None,
            Needs::Vel,
            |c, w| Some(ucomm::printed_q_ordering(&c.alg, c.vel(), w)),
        )),
        errata(sector(
            Velocity,
            "printed-VV-dual-k4",
            "[V̂_k, Ṽ₄] = −(iλ/2r̂)({Ṽ_k, Ṽ₄} − {V̂_k, V̂₄})",
            2,
            None,
            Needs::Vel,
            |c, w| Some(commutators::vv_dual_k4(&c.alg, c.vel(), w, -1.0)),
        )),
        errata(sector(
            Monopole,
            "printed-comVV-SO4",
            "[V̂_a, V̂_b] = −iλ(κ/2) ε_abcd Ŝ_cd / (r̂(r̂²−λ²))",
            2,
            None,
            Needs::Field,
            |c, w| (c.alg.sector().kappa() != 0).then(|| c.field().so4_form(&c.alg, w, 1.0)),
        )),
        errata(sector(
            Monopole,
            "printed-VV-final",
            "ε_ijk[V̂_i, V̂_j] = −2iλκ Ŝ_k4/(r̂(r̂²−λ²))",
            2,
            None,
            Needs::Vel,
            |c, w| (c.alg.sector().kappa() != 0).then(|| associator::doubled_final_line(&c.alg, c.vel(), w)),
        )),
        errata(sector(
            Monopole,
            "printed-VV-exchange",
            "ε_ijk[V̂_i, V̂_j] = ¼εσⁱ_αβσʲ_δγ([Û_αβ, Û†_δγ] − [Û_γδ, Û†_βα])",
            2,
            None,
            Needs::Vel,
            |c, w| (c.alg.sector().kappa() != 0).then(|| associator::printed_exchange_expansion(c.vel(), w)),
        )),
        errata(global(Monopole, "printed-fierz", "ε_ijk σⁱ_αβ σʲ_δγ = i(σᵏ_αδ δ_γβ − σᵏ_γβ δ_αδ)", Some(1e-15), None, |_| {
            Some(Comparison::exact(associator::fierz(true)))
        })),
    ]
}
