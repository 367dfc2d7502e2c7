//! Shared inputs for the benchmarks.

use pentagon_core::group::Group;
use pentagon_core::hopf::{group_algebra, multiplicity_module, phi_from_hopf_module, sweedler, HopfAlgebra};
use pentagon_core::pentagon::{MpeSolution, PentagonSolution};
use pentagon_core::FieldSpec;

pub fn algebra(name: &str) -> HopfAlgebra {
    let q = FieldSpec::Rational;
    match name {
        "c2" => group_algebra(&Group::cyclic(2), q),
        "c4" => group_algebra(&Group::cyclic(4), q),
        "s3" => group_algebra(&Group::symmetric3(), q),
        "sweedler" => sweedler(q),
        _ => panic!("unknown algebra {name}"),
    }
    .expect("builtin algebra")
}

/// `Φ_H` of the named algebra with multiplicity `d`.
pub fn solution(name: &str, d: usize) -> PentagonSolution {
    let hm = multiplicity_module(&algebra(name), d).expect("module");
    phi_from_hopf_module(&hm).expect("solution")
}

pub fn diagonal(name: &str, d: usize) -> MpeSolution {
    MpeSolution::diagonal(&solution(name, d)).expect("diagonal pair")
}
