"""50-digit recomputation of the analytic bounds, written from the formulas."""

import mpmath as mp

DPS = 50


def _params(alpha):
    return dict(c0=mp.mpf(1) / mp.mpf("53.989"), A=mp.mpf(8) / 3, c1=mp.mpf("2.375"), alpha=mp.mpf(alpha))


def C(alpha):
    p = _params(alpha)
    return 4 * 1836 * p["c1"] / (p["A"] * p["alpha"]) * (2 / p["A"] - p["alpha"]) ** 4


def eta_from_log(lt):
    c0 = _params(0.25)["c0"]
    return c0 / (lt ** (mp.mpf(2) / 3) * mp.log(lt) ** (mp.mpf(1) / 3))


def log_sn_bound(lx, lN, alpha, M):
    """log of M log x + 8.7 C x^(1 - A alpha eta(4 x log^2 x / N)) log^4 x, x = e^lx."""
    with mp.workdps(DPS):
        lx, lN, a = mp.mpf(lx), mp.mpf(lN), mp.mpf(alpha)
        p = _params(a)
        lt = mp.log(4) + lx + 2 * mp.log(lx) - lN
        e = 1 - p["A"] * a * eta_from_log(lt)
        second = mp.mpf("8.7") * C(a) * mp.exp(e * lx) * lx**4
        return mp.log(mp.mpf(M) * lx + second)


def log_first_moment(lx, delta, lI, M):
    with mp.workdps(DPS):
        lx, d = mp.mpf(lx), mp.mpf(delta)
        return mp.log(mp.mpf(M) + mp.mpf("8.1") * mp.exp(mp.mpf(lI) - 2 * lx) / d**2)


def log_integral_I(lx, lT, delta, alpha):
    with mp.workdps(DPS):
        lx, lT, d, a = mp.mpf(lx), mp.mpf(lT), mp.mpf(delta), mp.mpf(alpha)
        p = _params(a)
        e = 3 - p["A"] * a * eta_from_log(lT)
        return mp.log(C(a) * d**2) + e * lx + 4 * mp.log(lx)
