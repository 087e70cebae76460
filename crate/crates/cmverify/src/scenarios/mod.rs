mod calculus;
mod family;
mod laplacian;
mod semigroup;
mod translation;

use crate::registry::Scenario;

pub(crate) const ALL: &[Scenario] = &[
    Scenario {
        id: "hilbert-axioms",
        description: "sesquilinearity, conjugate symmetry, Cauchy-Schwarz and the parallelogram law on random atomic states",
        area: "Hilbert structure",
        params: calculus::HILBERT,
        series: false,
        body: calculus::hilbert_axioms,
    },
    Scenario {
        id: "eta-zeta-roundtrip",
        description: "the squaring map z|z| and its inverse undo each other",
        area: "square-root calculus",
        params: calculus::ETA_ZETA,
        series: false,
        body: calculus::eta_zeta_roundtrip,
    },
    Scenario {
        id: "representation-independence",
        description: "sums, inner products and measures do not depend on the dominating base",
        area: "square-root calculus",
        params: calculus::REPRESENTATION,
        series: false,
        body: calculus::representation_independence,
    },
    Scenario {
        id: "cauchy-completeness",
        description: "explicit Cauchy sequences of atomic states converge at their closed-form rates",
        area: "Hilbert structure",
        params: calculus::CAUCHY,
        series: true,
        body: calculus::cauchy_completeness,
    },
    Scenario {
        id: "product-factorization",
        description: "product measures: norms multiply, inner products and inner-product measures factor",
        area: "products of measures",
        params: calculus::PRODUCT,
        series: false,
        body: calculus::product_factorization,
    },
    Scenario {
        id: "translation-unitarity",
        description: "translations are unitary and form a group, exactly on lattice shifts",
        area: "translations and derivatives",
        params: translation::UNITARITY,
        series: false,
        body: translation::translation_unitarity,
    },
    Scenario {
        id: "generator-symmetry",
        description: "i d/dx_k is symmetric on band-limited heads and on tail coordinates",
        area: "translations and derivatives",
        params: translation::SYMMETRY,
        series: false,
        body: translation::generator_symmetry,
    },
    Scenario {
        id: "difference-quotient-rate",
        description: "difference quotients converge to the derivative at first order, per coordinate",
        area: "translations and derivatives",
        params: translation::DIFFERENCE_QUOTIENT,
        series: true,
        body: translation::difference_quotient_rate,
    },
    Scenario {
        id: "strong-continuity",
        description: "||tau_h u - u|| vanishes linearly in h; disjoint tail shifts sit at distance sqrt(2)",
        area: "translations and derivatives",
        params: translation::CONTINUITY,
        series: true,
        body: translation::strong_continuity,
    },
    Scenario {
        id: "tail-derivative",
        description: "a tail derivative replaces one factor by f'_n and leaves the others untouched",
        area: "infinite products",
        params: translation::TAIL_DERIVATIVE,
        series: true,
        body: translation::tail_derivative,
    },
    Scenario {
        id: "orthonormal-family",
        description: "bump products indexed by binary addresses are orthonormal with summable derivative norms",
        area: "infinite products",
        params: family::FAMILY,
        series: false,
        body: family::orthonormal_family,
    },
    Scenario {
        id: "h1-form",
        description: "the Sobolev form on Gaussian heads, family tails and their tensor products",
        area: "Sobolev form and resolvent",
        params: family::H1_FORM,
        series: false,
        body: family::h1_form,
    },
    Scenario {
        id: "tensor-contraction",
        description: "tensoring factors inner products; head and tail contractions are its adjoints",
        area: "products of measures",
        params: family::TENSOR,
        series: false,
        body: family::tensor_contraction,
    },
    Scenario {
        id: "resolvent",
        description: "(1 - L)^-1 satisfies the weak identity, the H1 bound and matches the Laplace transform of the heat flow",
        area: "Sobolev form and resolvent",
        params: laplacian::RESOLVENT,
        series: false,
        body: laplacian::resolvent_checks,
    },
    Scenario {
        id: "laplacian-form",
        description: "<-Lu, u> is the sum of derivative norms and is non-negative",
        area: "Laplacian on cylinder states",
        params: laplacian::FORM,
        series: false,
        body: laplacian::laplacian_form,
    },
    Scenario {
        id: "laplacian-translation-invariance",
        description: "the Laplacian commutes with lattice and spectral translations",
        area: "Laplacian on cylinder states",
        params: laplacian::INVARIANCE,
        series: false,
        body: laplacian::translation_invariance,
    },
    Scenario {
        id: "schrodinger-factorization",
        description: "Schrodinger flow of a family sharing one tail: joint Gram equals head-evolved Gram",
        area: "heat and Schrodinger semigroups",
        params: semigroup::SCHRODINGER,
        series: false,
        body: semigroup::schrodinger_factorization,
    },
    Scenario {
        id: "heat-factorization",
        description: "heat flow of a family sharing one tail: joint Gram proportional to head-evolved Gram",
        area: "heat and Schrodinger semigroups",
        params: semigroup::HEAT,
        series: true,
        body: semigroup::heat_factorization,
    },
    Scenario {
        id: "heat-contraction",
        description: "heat norms decrease monotonically in t, Schrodinger norms stay constant",
        area: "heat and Schrodinger semigroups",
        params: semigroup::CONTRACTION,
        series: true,
        body: semigroup::heat_contraction,
    },
    Scenario {
        id: "semigroup-laws",
        description: "composition, identity at t = 0 and inverses of the evolutions",
        area: "heat and Schrodinger semigroups",
        params: semigroup::LAWS,
        series: false,
        body: semigroup::semigroup_laws,
    },
];
