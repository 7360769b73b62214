from core.suites import SuiteResult, register_suite
from padic.hilbert import hilbert, hilbert_oracle
from padic.numbers import PAdic
from padic.squares import class_representatives

HILBERT_PRIMES = (2, 3, 5, 7, 13)
SHIFTS = range(-2, 3)


def shifted_representatives(p):
    return [rep.shift(k) for rep in class_representatives(p) for k in SHIFTS]


@register_suite("hilbert")
def hilbert_suite(rng):
    result = SuiteResult("hilbert")
    for p in HILBERT_PRIMES:
        elements = shifted_representatives(p)
        for a in elements:
            for b in elements:
                closed = hilbert(a, b)
                result.expect(closed == hilbert_oracle(a, b), p=p, a=a, b=b, closed=closed)
                result.expect(closed == hilbert(b, a), p=p, a=a, b=b, law="symmetry")
        reps = class_representatives(p)
        for a in reps:
            for b in reps:
                for c in reps:
                    result.expect(
                        hilbert(a * b, c) == hilbert(a, c) * hilbert(b, c),
                        p=p, a=a, b=b, c=c, law="bilinearity",
                    )
        for value in range(2, 4 * p):
            a = PAdic.from_int(p, value)
            one_minus = PAdic.from_int(p, 1 - value)
            result.expect(hilbert(a, one_minus) == 1, p=p, a=a, law="steinberg")
            result.expect(hilbert(a, -a) == 1, p=p, a=a, law="(z,-z)")
    result.details["primes"] = list(HILBERT_PRIMES)
    return result
