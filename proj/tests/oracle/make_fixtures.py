#!/usr/bin/env python3
"""Regenerates tests/oracle/fixtures.hpp.

Frozen reference values for the econometrics test suite, computed with
statsmodels / scipy so the C++ implementations are checked against an
independent stack. Input series are produced by a small inline LCG so the
script has no RNG-version dependence. Run from the repo root:

    python3 tests/oracle/make_fixtures.py > tests/oracle/fixtures.hpp
"""
import numpy as np
from scipy import stats
from scipy.linalg import eigh, inv
import statsmodels.api as sm
from statsmodels.tsa.stattools import adfuller


def lcg_stream(seed, n):
    # Numerical Recipes LCG; top 32 bits mapped to [0,1)
    state = seed & 0xFFFFFFFFFFFFFFFF
    out = []
    for _ in range(n):
        state = (state * 6364136223846793005 + 1442695040888963407) & 0xFFFFFFFFFFFFFFFF
        out.append((state >> 32) / 2**32)
    return np.array(out)


def gauss(seed, n):
    u = lcg_stream(seed, 2 * n)
    u1 = np.clip(u[0::2], 1e-12, 1.0)
    u2 = u[1::2]
    return np.sqrt(-2 * np.log(u1)) * np.cos(2 * np.pi * u2)


def fmt(a):
    return ", ".join("%.17g" % v for v in np.atleast_1d(a))


def emit_array(name, a):
    print(f"inline constexpr double {name}[] = {{{fmt(a)}}};")


def johansen_rc(Z):
    """Johansen RRR with restricted constant, one lagged difference."""
    dz = np.diff(Z, axis=0)
    Z0 = dz[1:]
    Z1 = np.column_stack([Z[1:-1], np.ones(len(Z) - 2)])
    Z2 = dz[:-1]

    def resid(A, B):
        return A - B @ np.linalg.lstsq(B, A, rcond=None)[0]

    R0, R1 = resid(Z0, Z2), resid(Z1, Z2)
    N = len(R0)
    S00 = R0.T @ R0 / N
    S01 = R0.T @ R1 / N
    S11 = R1.T @ R1 / N
    lam, V = eigh(S01.T @ inv(S00) @ S01, S11)
    order = np.argsort(lam)[::-1]
    lam, V = lam[order], V[:, order]
    tr0 = -N * np.sum(np.log(1 - lam[:2]))
    tr1 = -N * np.log(1 - lam[1])
    b = V[:, 0] / V[0, 0]
    alpha = (S01 @ b) / (b @ S11 @ b)
    Sigma_u = S00 - np.outer(S01 @ b, S01 @ b) / (b @ S11 @ b)
    r12 = R1[:, 1:]
    quad = alpha @ inv(Sigma_u) @ alpha
    se = np.sqrt(np.diag(inv(r12.T @ r12)) / quad)
    return N, lam, tr0, tr1, b, se


def main():
    print("// Generated by make_fixtures.py -- do not edit by hand.")
    print("#pragma once")
    print()

    # ---- ADF fixture: mildly mean-reverting series, n=60 ----
    e = gauss(12345, 60)
    y = np.empty(60)
    y[0] = 50.0
    for t in range(1, 60):
        y[t] = 50.0 + 0.8 * (y[t - 1] - 50.0) + 0.6 * e[t]
    emit_array("kAdfSeries", y)
    t_stat, p_val, usedlag, nobs, *_ = adfuller(y, maxlag=1, regression="c", autolag=None)
    print(f"inline constexpr double kAdfTStat = {t_stat:.17g};")
    print(f"inline constexpr double kAdfPValue = {p_val:.17g};")
    print(f"inline constexpr int kAdfNobs = {nobs};")
    print()

    # ---- MacKinnon p-value spot checks (constant-only case) ----
    from statsmodels.tsa.adfvalues import mackinnonp
    taus = [-4.2, -3.43, -2.86, -1.61, -1.0, 0.5, 3.0, -20.0]
    emit_array("kMacKinnonTau", taus)
    emit_array("kMacKinnonP", [mackinnonp(t, regression="c", N=1) for t in taus])
    print()

    # ---- Johansen fixture: cointegrated pair, n=120 ----
    n = 120
    w = gauss(777, n)
    x = 50 + np.cumsum(0.5 * w)
    u = np.zeros(n)
    eu = gauss(778, n)
    for t in range(1, n):
        u[t] = 0.5 * u[t - 1] + 0.05 * eu[t]
    yj = x + 0.05 + u
    Z = np.column_stack([x, yj])
    N, lam, tr0, tr1, b, se = johansen_rc(Z)
    emit_array("kJohansenX", x)
    emit_array("kJohansenY", yj)
    print(f"inline constexpr int kJohansenN = {N};")
    emit_array("kJohansenEig", lam)
    print(f"inline constexpr double kJohansenTrace0 = {tr0:.17g};")
    print(f"inline constexpr double kJohansenTrace1 = {tr1:.17g};")
    emit_array("kJohansenBeta", b)
    emit_array("kJohansenBetaSe", se)
    print()

    # ---- Newey-West convergence fixture ----
    nd = 80
    d = 0.3 + 0.4 * gauss(99, nd)
    for t in range(1, nd):
        d[t] = 0.3 + 0.6 * (d[t - 1] - 0.3) + (d[t] - 0.3)
    emit_array("kNwDiff", d)
    L = int(np.floor(4 * (nd / 100.0) ** (2.0 / 9.0)))
    ols = sm.OLS(d, np.ones(nd)).fit(cov_type="HAC", cov_kwds={"maxlags": L})
    alpha_hat = float(ols.params[0])
    nw_se = float(ols.bse[0])
    tt = alpha_hat / nw_se
    print(f"inline constexpr int kNwLag = {L};")
    print(f"inline constexpr double kNwAlpha = {alpha_hat:.17g};")
    print(f"inline constexpr double kNwSe = {nw_se:.17g};")
    print(f"inline constexpr double kNwT = {tt:.17g};")
    print(f"inline constexpr double kNwP = {2 * stats.t.sf(abs(tt), nd - 1):.17g};")
    print()

    # ---- Variance ratio fixture ----
    rx = 0.02 * gauss(31, 90)
    ry = 0.01 * gauss(32, 70)
    emit_array("kVrX", rx)
    emit_array("kVrY", ry)
    F = np.var(rx, ddof=1) / np.var(ry, ddof=1)
    dfx, dfy = len(rx) - 1, len(ry) - 1
    p_lower = stats.f.cdf(F, dfx, dfy)
    p_upper = stats.f.sf(F, dfx, dfy)
    p_two = 2 * min(p_lower, p_upper)
    print(f"inline constexpr double kVrF = {F:.17g};")
    print(f"inline constexpr double kVrPLower = {p_lower:.17g};")
    print(f"inline constexpr double kVrPUpper = {p_upper:.17g};")
    print(f"inline constexpr double kVrPTwo = {p_two:.17g};")
    print()

    # ---- Descriptive statistics fixture ----
    s = 40 + 6 * gauss(55, 48) ** 3
    emit_array("kDescSeries", s)
    print(f"inline constexpr double kDescMean = {np.mean(s):.17g};")
    print(f"inline constexpr double kDescMedian = {np.median(s):.17g};")
    print(f"inline constexpr double kDescSd = {np.std(s, ddof=1):.17g};")
    print(f"inline constexpr double kDescSkew = {stats.skew(s, bias=True):.17g};")
    print(f"inline constexpr double kDescKurt = {stats.kurtosis(s, fisher=False, bias=True):.17g};")
    print()

    # ---- Distribution function spot checks ----
    print(f"inline constexpr double kStudentCdf_2_10 = {stats.t.cdf(2.0, 10):.17g};")
    print(f"inline constexpr double kStudentCdf_m1_5 = {stats.t.cdf(-1.0, 5):.17g};")
    print(f"inline constexpr double kFCdf_2_10_20 = {stats.f.cdf(2.0, 10, 20):.17g};")
    print(f"inline constexpr double kNormCdf_m196 = {stats.norm.cdf(-1.96):.17g};")


if __name__ == "__main__":
    main()
