"""High-precision numeric checks of the asymptotic statements.

Everything exact stays exact: integers taken from the series modules are
carried verbatim into the samples, and floats only ever appear in
predictions, ratios, and residuals.  All evaluations run under mpmath at
a configurable number of decimal digits (default 50), since the growth
factors exp(pi**2 / (6 eps)) overflow doubles long before eps is small
enough to be interesting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from mpmath import mp

from .genfun import defect_series
from .partitions import partition_count

DEFAULT_DPS = 50


def ingham_predict(growth_a, power_alpha, scale_ell, n: int, dps: int = DEFAULT_DPS):
    """Tauberian coefficient estimate for a monotone series.

    If f(e**-eps) ~ ell * eps**alpha * exp(A/eps) as eps -> 0+, then the
    n-th coefficient grows like

        ell * A**(alpha/2 + 1/4) / (2 sqrt(pi) n**(alpha/2 + 3/4))
            * exp(2 sqrt(A n)).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    with mp.workdps(dps):
        a = mp.mpf(growth_a)
        if a <= 0:
            raise ValueError("growth constant A must be positive")
        alpha = mp.mpf(power_alpha)
        ell = mp.mpf(scale_ell)
        nn = mp.mpf(n)
        half = mp.mpf(1) / 2
        value = (
            ell
            * a ** (alpha * half + mp.mpf(1) / 4)
            / (2 * mp.sqrt(mp.pi) * nn ** (alpha * half + mp.mpf(3) / 4))
            * mp.exp(2 * mp.sqrt(a * nn))
        )
        return +value


def hardy_ramanujan_estimate(n: int, dps: int = DEFAULT_DPS):
    """Leading-order estimate exp(pi sqrt(2n/3)) / (4 n sqrt(3)) for p(n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    with mp.workdps(dps):
        nn = mp.mpf(n)
        return +(mp.exp(mp.pi * mp.sqrt(2 * nn / 3)) / (4 * nn * mp.sqrt(3)))


def partition_ingham_estimate(n: int, dps: int = DEFAULT_DPS):
    """ingham_predict specialised to the partition generating function.

    Uses A = pi**2/6, alpha = 1/2, ell = 1/sqrt(2 pi); algebraically this
    collapses to the same closed form as hardy_ramanujan_estimate, which
    the tests confirm numerically.
    """
    with mp.workdps(dps + 10):
        a = mp.pi**2 / 6
        ell = 1 / mp.sqrt(2 * mp.pi)
        value = ingham_predict(a, mp.mpf(1) / 2, ell, n, dps=dps + 10)
    with mp.workdps(dps):
        return +value


class DefectPrediction(NamedTuple):
    main_term: object
    np_form: object


def defect_predict(t: int, n: int, dps: int = DEFAULT_DPS) -> DefectPrediction:
    """Two predictions for the total defect over partitions of n.

    main_term is sqrt(3)/(12 (t-1)) * exp(pi sqrt(2n/3)); np_form is
    n*p(n)/(t-1) with the exact partition count.  The two agree to leading
    order.
    """
    if t < 2:
        raise ValueError("modulus t must be at least 2")
    if n < 1:
        raise ValueError("n must be at least 1")
    with mp.workdps(dps):
        nn = mp.mpf(n)
        main = mp.sqrt(3) / (12 * (t - 1)) * mp.exp(mp.pi * mp.sqrt(2 * nn / 3))
        np_form = mp.mpf(n * partition_count(n)) / (t - 1)
        return DefectPrediction(+main, +np_form)


def _sigma1(n: int) -> int:
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += d
    return total


def eisenstein_transform_residual(m: int, eps, dps: int = DEFAULT_DPS):
    """Relative gap between two evaluations of sum_n sigma_1(n) q**(m n)
    at q = e**-eps.

    The left side sums the Lambert series directly.  The right side uses
    the weight-two Eisenstein inversion

        1/24 + pi**2/(6 m**2 eps**2) * (1 - 24 sum sigma_1(n) e**(-4 pi**2 n/(eps m)))
            - 1/(2 m eps),

    whose dual sum converges extremely fast.  The identity is exact, so
    the residual only measures summation and rounding error.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    with mp.workdps(dps + 15):
        e = mp.mpf(eps)
        if not 0 < e <= 1:
            raise ValueError("eps must satisfy 0 < eps <= 1")
        tol = mp.mpf(10) ** (-(dps + 10))

        x = mp.exp(-m * e)
        lhs = mp.mpf(0)
        xn = x
        n = 1
        while True:
            term = n * xn / (1 - xn)
            lhs += term
            if term < tol * lhs:
                break
            xn *= x
            n += 1

        y = mp.exp(-4 * mp.pi**2 / (e * m))
        dual = mp.mpf(0)
        yn = y
        n = 1
        while True:
            term = _sigma1(n) * yn
            dual += term
            if term < tol:
                break
            yn *= y
            n += 1

        rhs = (
            mp.mpf(1) / 24
            + mp.pi**2 / (6 * m**2 * e**2) * (1 - 24 * dual)
            - 1 / (2 * m * e)
        )
        residual = abs(lhs - rhs) / abs(lhs)
    with mp.workdps(dps):
        return +residual


def eta_growth_ratio(eps, dps: int = DEFAULT_DPS):
    """Ratio of 1/(e**-eps; e**-eps)_inf to sqrt(eps/(2 pi)) e**(pi**2/(6 eps)).

    Tends to 1 from below as eps -> 0+; the gap behaves like eps/24.
    Evaluated in log space so tiny eps cannot overflow.
    """
    with mp.workdps(dps + 15):
        e = mp.mpf(eps)
        if e <= 0:
            raise ValueError("eps must be positive")
        tiny = mp.mpf(10) ** (-(dps + 12))
        x = mp.exp(-e)
        log_lhs = mp.mpf(0)
        xk = x
        while xk > tiny:
            log_lhs -= mp.log(1 - xk)
            xk *= x
        log_rhs = mp.log(e) / 2 + mp.pi**2 / (6 * e) - mp.log(2 * mp.pi) / 2
        ratio = mp.exp(log_lhs - log_rhs)
    with mp.workdps(dps):
        return +ratio


@dataclass(frozen=True)
class AsymptoticSample:
    """One exact-versus-predicted data point for the total defect at size n.

    exact comes verbatim from the exact series; ratio is exact divided by
    the n*p(n)/(t-1) prediction, the form whose convergence the trend
    tests track.
    """

    n: int
    exact: int
    predicted_main_term: object
    predicted_np_over_t1: object
    ratio: object


def defect_samples(
    t: int, ns: Sequence[int], dps: int = DEFAULT_DPS
) -> list[AsymptoticSample]:
    """Exact total defects at the given sizes with both predictions attached."""
    if not ns:
        return []
    if any(n < 1 for n in ns):
        raise ValueError("sample sizes must be at least 1")
    order = max(ns)
    exact_series = defect_series(t, order)
    samples = []
    for n in ns:
        exact = exact_series[n]
        prediction = defect_predict(t, n, dps=dps)
        with mp.workdps(dps):
            ratio = +(mp.mpf(exact) / prediction.np_form)
        samples.append(
            AsymptoticSample(
                n=n,
                exact=exact,
                predicted_main_term=prediction.main_term,
                predicted_np_over_t1=prediction.np_form,
                ratio=ratio,
            )
        )
    return samples


def samples_to_csv(samples: Sequence[AsymptoticSample], digits: int = 15) -> str:
    """CSV table with columns n, exact, predicted_main_term,
    predicted_np_over_t1, ratio."""
    lines = ["n,exact,predicted_main_term,predicted_np_over_t1,ratio"]
    for s in samples:
        lines.append(
            f"{s.n},{s.exact},{mp.nstr(s.predicted_main_term, digits)},"
            f"{mp.nstr(s.predicted_np_over_t1, digits)},{mp.nstr(s.ratio, digits)}"
        )
    return "\n".join(lines) + "\n"
