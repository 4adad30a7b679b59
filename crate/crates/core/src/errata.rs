//! Known misprints in the published identities and how this crate reads them.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub location: &'static str,
    pub printed: &'static str,
    pub used: &'static str,
    pub reason: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        location: "Eq. (2.3), Eq. (2.4)",
        printed: "argument -cx/(4s^k)",
        used: "argument -cx/(4s^2), prefactor s^-(p+2)",
        reason: "the k-th term carries Gamma(p+2+2k) s^-(p+2+2k)",
    },
    Erratum {
        location: "Eq. (2.3)",
        printed: "2psi3 with two lower pairs",
        used: "2Psi2",
        reason: "the term-wise integral yields exactly two lower gamma factors",
    },
    Erratum {
        location: "Theorem 2.1 proof",
        printed: "(-cx/2)^k",
        used: "(-cx/4)^k",
        reason: "(x^{1/2}/2)^{2k} (-c)^k = (-cx/4)^k",
    },
    Erratum {
        location: "Theorem 2.3 proof",
        printed: "(-cx/2)^{2k}",
        used: "(-cx/4)^k",
        reason: "same assembly of the k-th term as Theorem 2.1",
    },
    Erratum {
        location: "Theorem 2.3",
        printed: "Re(e) > |Re(omega)| - 1/2",
        used: "zeta + omega + p + 3/2 > 0 and zeta - omega + p + 3/2 > 0",
        reason: "e is undefined; the conditions keep both upper gamma arguments positive",
    },
    Erratum {
        location: "Eq. (2.5), Eq. (2.6)",
        printed: "upper parameters (w+zeta+p+3/2, 2), (-w+zeta+p+3/2, 2)",
        used: "omega in place of w",
        reason: "w is the Whittaker index omega",
    },
    Erratum {
        location: "Theorem 2.4 proof",
        printed: "starts from H_{p,b,c}",
        used: "the general GTSF",
        reason: "the statement concerns the GTSF; H_{p,b,c} is its corollary",
    },
    Erratum {
        location: "Eq. (2.7), Eq. (2.8)",
        printed: "prefactor omega^(1-rho-p)",
        used: "omega^-(rho+p+1)",
        reason: "term-wise use of the K moment integral gives omega^-(rho+p+1+2k)",
    },
    Erratum {
        location: "Eq. (3.1), Corollary 3.1",
        printed: "1/[i^{2k+p+2} Omega^{2k+p+2} (-1)^{2k+p+1}]",
        used: "printed series kept with -1 = exp(-i pi); compared as -1 times the regularized one-sided integral",
        reason: "(-i Omega)^m = i^m (-1)^m Omega^m, so the printed (-1)^(m-1) carries one extra global sign",
    },
    Erratum {
        location: "Theorem 3.1",
        printed: "titled Euler Transform",
        used: "fractional Fourier transform",
        reason: "the theorem concerns the transform of order zeta",
    },
    Erratum {
        location: "Corollary 3.1",
        printed: "P in Gamma(k + P + (b+2)/2), transform symbol S",
        used: "p, and the fractional Fourier transform F",
        reason: "typesetting slips",
    },
    Erratum {
        location: "Eq. (1.6)",
        printed: "exp(-t^{zeta-1}/2)",
        used: "t^{zeta-1} exp(-t/2)",
        reason: "the gamma ratio on the right is the moment of t^{zeta-1} e^{-t/2} W",
    },
    Erratum {
        location: "Eq. (1.7)",
        printed: "W_{omega,zeta}(z) on the left, Gamma(1/2 + tau + omega) in the second coefficient",
        used: "W_{tau,omega}(z) with Gamma(2 omega)/Gamma(1/2 - tau + omega)",
        reason: "the standard connection formula; the printed coefficient is not symmetric under omega -> -omega",
    },
    Erratum {
        location: "Eq. (1.10)",
        printed: "integrand t^{rho-1} K_nu(ax) dx",
        used: "t^{rho-1} K_nu(at) dt",
        reason: "mixed integration variable",
    },
];
