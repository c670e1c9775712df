"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--words 2000] [--repeat 3]
"""

import argparse
import random
import timeit

from braidrev import kernels


def sample(strands, length, count, seed=0):
    rng = random.Random(seed)
    gens = list(range(1, strands)) + [-i for i in range(1, strands)]
    return [tuple(rng.choice(gens) for _ in range(length)) for _ in range(count)]


def cases(words):
    flags = kernels.FLAG_RIGHT | kernels.FLAG_LEFT | kernels.FLAG_COMMUTE
    encoded = [bytes(x + 64 for x in t) for t in words]
    return {
        "free_reduce": lambda m: [m.free_reduce(t) for t in words],
        "strong_reduce": lambda m: [m.strong_reduce(t) for t in words],
        "reverse_right": lambda m: [m.reverse_right(t, 10**9) for t in words],
        "reverse_left": lambda m: [m.reverse_left(t, 10**9) for t in words],
        "expand": lambda m: [m.expand(b, flags, kernels.REDUCED) for b in encoded],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--length", type=int, default=12)
    ap.add_argument("--strands", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    impls = kernels.implementations()
    if "compiled" not in impls:
        print("compiled kernels not built; only the Python backend is available")
    words = sample(args.strands, args.length, args.words)
    print(f"{args.words} words, n={args.strands}, length {args.length}; best of {args.repeat}")
    print(f"{'per word':<15}" + "".join(f"{name:>14}" for name in impls) + "   speedup")
    for name, fn in cases(words).items():
        times = {}
        for backend, mod in impls.items():
            times[backend] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = "".join(f"{times[b] * 1e6 / args.words:>11.2f} us" for b in impls)
        speed = times["python"] / times["compiled"] if "compiled" in times else 1.0
        print(f"{name:<15}{row}   {speed:6.1f}x")


if __name__ == "__main__":
    main()
