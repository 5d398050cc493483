//! Per-instance analysis shared by all suites.

use std::sync::{Arc, OnceLock};

use gradspec_core::{
    AlgebraError, GradedIdeal, GradedRing, GradedSubmodule, IdealLattice, Limits, NaturalMap, PrimeSpectrum,
    SecondSpectrum, SpectrumTopology, SubmoduleLattice,
};

use crate::instance::Instance;

pub struct Analysis {
    pub instance: Instance,
    pub limits: Limits,
    pub spectrum: PrimeSpectrum,
    pub topology: SpectrumTopology,
    /// Lattice index of `Gr(I)` for each lattice index `I`.
    pub radical: Vec<usize>,
    rfg: Vec<OnceLock<Option<Vec<usize>>>>,
    pub module: Option<ModuleAnalysis>,
}

pub struct ModuleAnalysis {
    pub second: SecondSpectrum,
    pub topology: SpectrumTopology,
    /// Absent for the zero module, where `R / Ann_R(M)` is the zero ring.
    pub phi: Option<Phi>,
    /// Ring lattice index of `Ann_R(N)` per submodule lattice index.
    pub ann: Vec<usize>,
    rfg_star: Vec<OnceLock<Option<Vec<usize>>>>,
}

/// The natural map together with an independently computed spectrum of
/// `R̄ = R / Ann_R(M)`.
pub struct Phi {
    pub map: NaturalMap,
    pub quotient: PrimeSpectrum,
    /// Codomain position of the preimage of each point of `Spec_G(R̄)`, if
    /// it is there.
    pub quotient_to_codomain: Vec<Option<usize>>,
}

impl Analysis {
    pub fn new(instance: Instance, limits: &Limits) -> Result<Self, AlgebraError> {
        let spectrum = PrimeSpectrum::new(instance.ring.clone(), limits)?;
        let topology = spectrum.topology();
        let ring = instance.ring.clone();
        let lattice = spectrum.lattice();
        let radical = lattice
            .iter()
            .map(|i| lattice.position_of(&ring.graded_radical(i)).expect("graded radicals are graded ideals"))
            .collect();
        let rfg = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        let module = match &instance.module {
            Some(m) => Some(ModuleAnalysis::new(m.clone(), &spectrum, limits)?),
            None => None,
        };
        Ok(Self { instance, limits: *limits, spectrum, topology, radical, rfg, module })
    }

    pub fn name(&self) -> &str {
        self.instance.name()
    }

    pub fn ring(&self) -> &GradedRing {
        &self.instance.ring
    }

    pub fn ideals(&self) -> &IdealLattice {
        self.spectrum.lattice()
    }

    pub fn ideal(&self, i: usize) -> &GradedIdeal {
        self.spectrum.lattice().get(i)
    }

    pub fn ideal_index(&self, ideal: &GradedIdeal) -> usize {
        self.ideals().position_of(ideal).expect("graded ideal of this ring")
    }

    pub fn gr(&self, i: usize) -> &GradedIdeal {
        self.ideal(self.radical[i])
    }

    /// Minimal RFG_g witness of lattice member `i`, computed once.
    pub fn rfg(&self, i: usize) -> &Option<Vec<usize>> {
        self.rfg[i].get_or_init(|| self.spectrum.rfg_witness(self.ideal(i)))
    }

    pub fn is_noetherian(&self) -> bool {
        self.topology.is_noetherian()
    }
}

impl ModuleAnalysis {
    fn new(module: Arc<gradspec_core::GradedModule>, spectrum: &PrimeSpectrum, limits: &Limits) -> Result<Self, AlgebraError> {
        let second = SecondSpectrum::new(module, limits)?;
        let topology = second.topology();
        let ann = second
            .lattice()
            .iter()
            .map(|n| spectrum.lattice().position_of(second.ann_in_ring(n)).expect("graded ideal"))
            .collect();
        let phi = match second.natural_map() {
            Ok(map) => {
                let ring = second.ring();
                let quotient = PrimeSpectrum::new(Arc::new(map.quotient.ring.clone()), limits)?;
                let quotient_to_codomain = quotient
                    .points()
                    .iter()
                    .map(|q| {
                        let p = map.quotient.preimage(ring, q);
                        spectrum.point_index(&p).and_then(|k| map.codomain.iter().position(|&c| c == k))
                    })
                    .collect();
                Some(Phi { map, quotient, quotient_to_codomain })
            }
            Err(AlgebraError::ZeroModule) => None,
            Err(e) => return Err(e),
        };
        let rfg_star = (0..second.lattice().len()).map(|_| OnceLock::new()).collect();
        Ok(Self { second, topology, phi, ann, rfg_star })
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        self.second.lattice()
    }

    pub fn sub(&self, i: usize) -> &GradedSubmodule {
        self.second.lattice().get(i)
    }

    pub fn index(&self, n: &GradedSubmodule) -> usize {
        self.lattice().position_of(n).expect("graded submodule of this module")
    }

    pub fn is_zero(&self) -> bool {
        self.second.module().is_zero()
    }

    /// `None` for the zero module.
    pub fn secondful(&self) -> Option<bool> {
        self.phi.as_ref().map(|p| p.map.is_surjective())
    }

    pub fn rfg_star(&self, i: usize) -> &Option<Vec<usize>> {
        self.rfg_star[i].get_or_init(|| self.second.rfg_star_witness(self.sub(i)))
    }
}

impl Phi {
    /// `V_G^{R̄}(Ī)` for a graded ideal `I ⊇ Ann_R(M)`, as codomain
    /// positions, computed inside the quotient ring.
    pub fn variety_of_image(&self, ideal: &GradedIdeal) -> Result<gradspec_core::BitSet, usize> {
        let image = self.map.quotient.image(ideal);
        self.quotient
            .variety(&image)
            .iter()
            .map(|q| self.quotient_to_codomain[q].ok_or(q))
            .collect()
    }
}
