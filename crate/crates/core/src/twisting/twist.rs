//! Twisted coefficient data as seen by the cochain engines: for each orbit
//! type `H` and generator `x ∈ X^H` of positive dimension, the automorphism
//! `φ_H(τ_H(x))` of `M(G/H)`.

use std::fmt;
use std::sync::Arc;

use crate::abelian::{AbHom, CoefficientSystem, PiModule};
use crate::equivariant::GSimplicialSet;
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::simplicial::{SimplexId, SimplexRef};
use crate::twisting::function::TwistingFunction;
use crate::twisting::kappa::{EdgeAction, Kappa};

pub trait Twist: fmt::Debug + Send + Sync {
    fn space(&self) -> &Arc<GSimplicialSet>;
    fn coefficients(&self) -> &CoefficientSystem;
    /// `φ_H(τ_H(x))` for a generator `x` of `X` fixed by `H` with `dim x ≥ 1`.
    fn action(&self, h: usize, x: SimplexId) -> Result<AbHom>;
    /// Every consistency condition the twist relies on, checked through level `q_max`.
    fn validate(&self, q_max: usize) -> Result<ValidationReport>;
}

/// `τ ≡ e`.
#[derive(Debug, Clone)]
pub struct Untwisted {
    space: Arc<GSimplicialSet>,
    module: CoefficientSystem,
}

impl Untwisted {
    pub fn new(space: Arc<GSimplicialSet>, module: CoefficientSystem) -> Result<Self> {
        if space.orbit_category().group() != module.orbit_category().group() {
            return Err(Error::Invalid("space and coefficients over different groups".into()));
        }
        Ok(Self { space, module })
    }
}

impl Twist for Untwisted {
    fn space(&self) -> &Arc<GSimplicialSet> {
        &self.space
    }

    fn coefficients(&self) -> &CoefficientSystem {
        &self.module
    }

    fn action(&self, h: usize, _: SimplexId) -> Result<AbHom> {
        Ok(AbHom::identity(self.module.value(h)))
    }

    fn validate(&self, _: usize) -> Result<ValidationReport> {
        Ok(self.module.validate())
    }
}

/// A twisting function into a finite O_G-group with a π-module.
#[derive(Debug, Clone)]
pub struct GroupTwist {
    tau: TwistingFunction,
    phi: PiModule,
}

impl GroupTwist {
    pub fn new(tau: TwistingFunction, phi: PiModule) -> Result<Self> {
        if tau.pi().orbit_category().group() != phi.pi().orbit_category().group() {
            return Err(Error::Invalid(
                "twisting function and module over different groups".into(),
            ));
        }
        Ok(Self { tau, phi })
    }

    pub fn tau(&self) -> &TwistingFunction {
        &self.tau
    }

    pub fn phi(&self) -> &PiModule {
        &self.phi
    }
}

impl Twist for GroupTwist {
    fn space(&self) -> &Arc<GSimplicialSet> {
        self.tau.space()
    }

    fn coefficients(&self) -> &CoefficientSystem {
        self.phi.module()
    }

    fn action(&self, h: usize, x: SimplexId) -> Result<AbHom> {
        Ok(self.phi.phi(h, self.tau.value_on_generator(h, x)).clone())
    }

    fn validate(&self, q_max: usize) -> Result<ValidationReport> {
        let mut rep = self.tau.validate(q_max)?;
        rep.merge(self.phi.validate());
        Ok(rep)
    }
}

/// `κ` with coefficients acted on through edge automorphisms.
#[derive(Debug, Clone)]
pub struct EdgeTwist {
    kappa: Kappa,
    action: EdgeAction,
}

impl EdgeTwist {
    pub fn new(kappa: Kappa, action: EdgeAction) -> Self {
        Self { kappa, action }
    }

    pub fn kappa(&self) -> &Kappa {
        &self.kappa
    }

    pub fn edge_action(&self) -> &EdgeAction {
        &self.action
    }
}

impl Twist for EdgeTwist {
    fn space(&self) -> &Arc<GSimplicialSet> {
        self.kappa.space()
    }

    fn coefficients(&self) -> &CoefficientSystem {
        self.action.module()
    }

    fn action(&self, h: usize, x: SimplexId) -> Result<AbHom> {
        self.action.act(h, &self.kappa.word(&SimplexRef::nondegenerate(x)))
    }

    fn validate(&self, _: usize) -> Result<ValidationReport> {
        let mut rep = self.kappa.validate();
        rep.merge(self.action.validate());
        rep.merge(self.action.module().validate());
        Ok(rep)
    }
}
