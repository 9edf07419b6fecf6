"""
Loading data
============

CSV files, JSON manifests, the benchmark registry and seeded synthetic data.
"""

import pathlib
import tempfile

import furthest_pair as fp

# a CSV with a header and a label column in front
tmp = pathlib.Path(tempfile.mkdtemp())
(tmp / "toy.csv").write_text("label,x,y\na,0,0\nb,3,4\nc,1,1\n")
desc = fp.DatasetDescriptor("toy", "toy.csv", expected_d=2, label_columns=(0,), has_header=True)
toy = fp.load_csv(desc, base_dir=tmp)
print(toy.points, "diameter", fp.brute_force(toy).value)

# bad cells are reported with their 1-based position
(tmp / "bad.csv").write_text("1.0,abc,3.0\n")
try:
    fp.load_csv(fp.DatasetDescriptor("bad", "bad.csv"), base_dir=tmp)
except fp.ParseError as exc:
    print("ParseError:", exc)

# a manifest lists datasets; synthetic entries are generated on the fly
(tmp / "m.json").write_text("""{"datasets": [
  {"name": "toy", "path": "toy.csv", "label_columns": [0], "has_header": true},
  {"name": "cube", "path": "synthetic",
   "synthetic": {"n": 1198, "d": 14, "low": -10, "high": 10, "seed": 1}}
]}""")
for d in fp.load_manifest(tmp / "m.json"):
    ds = fp.load_csv(d, base_dir=tmp)
    print(f"{ds.name}: {ds.n} x {ds.d}")

# on the random cube the beam search is a lower bound with a small gap
cube = fp.generate_synthetic(fp.SyntheticSpec(1198, 14, -10, 10, seed=1))
exact = fp.brute_force(cube).value
beam = fp.beam_search(cube, fp.AlgoConfig(seed=1)).value
print(f"cube diameter {exact:.4f}, beam {beam:.4f}, gap {exact - beam:.4f}")

# the registry knows the shape of every benchmark set; only iris is bundled
for e in fp.registry()[:5]:
    print(e.key, e.descriptor.name, e.descriptor.expected_n, e.descriptor.expected_d, e.data_type)
