"""High-precision reference values for the unit tests.

Every value is computed by direct summation in mpmath at 40 digits over a
rectangle of indices large enough that the omitted tail is far below double
precision. The printed numbers are pasted into tests/frozen_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 40


def bivariate(a, b, g, d, x, y, K=160):
    s = mp.mpc(0)
    for k in range(K):
        for l in range(K):
            s += mp.rf(d, k + l) * mp.power(x, k) * mp.power(y, l) * mp.rgamma(a * k + b * l + g) / (
                mp.factorial(k) * mp.factorial(l))
    return s


def univariate(a, b, g, d, w1, w2, t, K=160):
    t = mp.mpf(t)
    return mp.power(t, g - 1) * bivariate(a, b, g, d, w1 * mp.power(t, a), w2 * mp.power(t, b), K)


def prabhakar(a, g, d, x, N=400):
    return mp.nsum(lambda n: mp.rf(d, n) * mp.power(x, n) / (mp.factorial(n) * mp.gamma(a * n + g)), [0, N])


def bound(a, b, g, d, w1, w2, L, K=120):
    s = mp.mpf(0)
    for k in range(K):
        for l in range(K):
            mu = a * k + b * l + g
            s += abs(mp.rf(d, k + l)) * abs(w1) ** k * abs(w2) ** l * mp.power(L, mp.re(mu)) / (
                mp.re(mu) * abs(mp.gamma(mu)) * mp.factorial(k) * mp.factorial(l))
    return s


def show(name, v):
    v = mp.mpc(v)
    print(f"{name}: re={mp.nstr(v.real, 20)} im={mp.nstr(v.imag, 20)}")


M = mp.mpf
show("bivariate(0.8,0.6,1.2,1.5; 0.3,-0.4)", bivariate(M('0.8'), M('0.6'), M('1.2'), M('1.5'), M('0.3'), M('-0.4')))
show("prabhakar(0.5,1,1; 0.25)", prabhakar(M('0.5'), 1, 1, M('0.25')))
show("prabhakar closed form e^{x^2} erfc(-x)", mp.e ** (M('0.0625')) * mp.erfc(-M('0.25')))
s = mp.mpf(2)
a, b, g, d, w1, w2 = M('0.5'), M('0.8'), M('1.2'), M(2), M('0.3'), M('0.1')
show("laplace(0.5,0.8,1.2,2,0.3,0.1; s=2)", s ** (-g) * (1 - w1 * s ** (-a) - w2 * s ** (-b)) ** (-d))
show("bound(1,1,1,1,1,1; L=1)", bound(1, 1, 1, 1, 1, 1, 1))
show("(e^2-1)/2", (mp.e ** 2 - 1) / 2)
show("bound(0.7,1.2,0.5,1.5,0.6,-0.4; L=2)", bound(M('0.7'), M('1.2'), M('0.5'), M('1.5'), M('0.6'), M('-0.4'), 2))
show("univariate(0.7,1.3,1,1,0.5,-0.5; t=1)", univariate(M('0.7'), M('1.3'), 1, 1, M('0.5'), M('-0.5'), 1))
show("univariate(0.6,0.9,0.6,-1,0.5,0.5; t=0.5) [correction, gamma'=0.6]",
     univariate(M('0.6'), M('0.9'), M('0.6'), -1, M('0.5'), M('0.5'), M('0.5')))
show("univariate(0.6,0.8,0.4,1,0.5,-0.3; t=0.7) [shift mu=0.6]",
     univariate(M('0.6'), M('0.8'), M('0.4'), 1, M('0.5'), M('-0.3'), M('0.7')))
show("fig1d bivariate(1.5,1,1,1; 2,1)", bivariate(M('1.5'), 1, 1, 1, 2, 1))
show("fig1a bivariate(1,1,1,1; 2,1)", bivariate(1, 1, 1, 1, 2, 1))
# complex parameters
show("bivariate(0.9+0.2i,0.7,1.1-0.3i,0.5+0.5i; 0.4+0.1i,-0.3)",
     bivariate(mp.mpc('0.9', '0.2'), M('0.7'), mp.mpc('1.1', '-0.3'), mp.mpc('0.5', '0.5'), mp.mpc('0.4', '0.1'), M('-0.3')))
show("loggamma(3.5+2i)", mp.loggamma(mp.mpc('3.5', '2')))
show("loggamma(-2.5+0.5i)", mp.loggamma(mp.mpc('-2.5', '0.5')))
show("rgamma(-3.7)", mp.rgamma(M('-3.7')))
show("rgamma(40.25)", mp.rgamma(M('40.25')))
x, y, t = M('0.2'), M('0.2'), M('0.5')
show("laguerre gf closed (1,1,1,1; 0.2,0.2; t=0.5)", (1 - t) ** -1 * mp.e ** (-(x + y) * t / (1 - t)))
show("laguerre gf closed (0.7,1.3,0.9,1.5; 0.3,-0.2; t=0.6)",
     (1 - M('0.6')) ** (-M('1.5')) * bivariate(M('0.7'), M('1.3'), M('0.9'), M('1.5'), -M('0.3') * M('0.6') / M('0.4'),
                                               M('0.2') * M('0.6') / M('0.4')))
