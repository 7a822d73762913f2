"""Timing comparison: compiled tracing kernels vs the pure-NumPy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from roomrelight import _kernels
from roomrelight._kernels import _ref


def time_fn(fn, *args, repeat=3, **kwargs):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args, **kwargs)
        best = min(best, time.perf_counter() - start)
    return best, out


def bench_image_source():
    dims = np.array([12.0, 14.0, 10.0])
    src = np.array([3.1, 4.2, 3.3])
    lst = np.array([8.2, 9.7, 6.1])
    rows = []
    for order in (20, 40, 60):
        t_ref, out_ref = time_fn(_ref.expand_images, dims, src, lst, order, np.inf)
        row = {"case": f"image-source order {order} ({len(out_ref[0])} paths)",
               "numpy_s": t_ref}
        if _kernels.BACKEND == "compiled":
            from roomrelight._kernels import _core

            t_core, out_core = time_fn(_core.expand_images, dims, src, lst, order, np.inf)
            assert np.array_equal(out_ref[0], out_core[0]), "backend mismatch"
            row["compiled_s"] = t_core
        rows.append(row)
    return rows


def bench_ray_tracer():
    from roomrelight.geometry import MaterialCoeffs, RoomModel

    mats = [MaterialCoeffs(f"w{i}", (0.8,) * 7) for i in range(6)]
    room = RoomModel.shoebox([5.0, 7.0, 3.5], mats)
    normals = np.array([p.normal for p in room.planes])
    offsets = np.array([p.offset for p in room.planes])
    poly_start = np.zeros(7, dtype=np.int32)
    for i, p in enumerate(room.planes):
        poly_start[i + 1] = poly_start[i] + len(p.vertices)
    poly_verts = np.concatenate([p.vertices for p in room.planes])
    plane_mat = np.array([p.material for p in room.planes], dtype=np.int32)
    src = np.array([1.2, 1.7, 1.1])
    lst = np.array([3.9, 5.3, 2.1])

    rows = []
    for n_rays in (1000, 5000):
        rng = np.random.default_rng(1)
        z = rng.uniform(-1, 1, n_rays)
        phi = rng.uniform(0, 2 * np.pi, n_rays)
        r = np.sqrt(1 - z**2)
        dirs = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
        args = (normals, offsets, poly_start, poly_verts, plane_mat, 6,
                src, lst, 0.5, dirs, 80, 0.6)
        t_ref, out_ref = time_fn(_ref.trace_rays, *args, repeat=1)
        row = {"case": f"ray tracer {n_rays} rays ({len(out_ref[0])} records)",
               "numpy_s": t_ref}
        if _kernels.BACKEND == "compiled":
            from roomrelight._kernels import _core

            t_core, out_core = time_fn(_core.trace_rays, *args)
            assert len(out_ref[0]) == len(out_core[0]), "backend mismatch"
            row["compiled_s"] = t_core
        rows.append(row)
    return rows


def main():
    print(f"active backend: {_kernels.BACKEND}")
    rows = bench_image_source() + bench_ray_tracer()
    width = max(len(r["case"]) for r in rows)
    header = f"{'case':<{width}}  {'numpy':>9}  {'compiled':>9}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for r in rows:
        numpy_s = r["numpy_s"]
        if "compiled_s" in r:
            speed = numpy_s / r["compiled_s"]
            print(f"{r['case']:<{width}}  {numpy_s:>8.3f}s  {r['compiled_s']:>8.3f}s  {speed:>7.1f}x")
        else:
            print(f"{r['case']:<{width}}  {numpy_s:>8.3f}s  {'-':>9}  {'-':>8}")


if __name__ == "__main__":
    main()
