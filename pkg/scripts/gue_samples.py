"""Exact row-k samples of uniform tilings, rescaled toward GUE corners."""
from schurasym.asymptotics import Profile, SignatureFamily
from schurasym.tilings import _rescale, sample_rows
from _csvout import parser, write

if __name__ == "__main__":
    p = parser(__doc__, "gue_samples.csv")
    p.add_argument("--N", type=int, default=30)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    f = Profile.halfstair()
    lam = SignatureFamily.corrected(f)(a.N)
    batch = sample_rows(lam, a.k, a.samples, a.seed)
    Z = _rescale([r[a.k - 1] for r in batch.patterns], a.k, a.N, float(f.E()), float(f.S()))
    rows = [(i, *[f"{v:.10f}" for v in z]) for i, z in enumerate(Z)]
    write(a.out, ("sample", *[f"z{j + 1}" for j in range(a.k)]), rows,
          {"N": a.N, "k": a.k, "samples": a.samples, "seed": a.seed, "method": batch.method})
