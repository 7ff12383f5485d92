#!/usr/bin/env python3
"""
Update Class Polynomial Cache
Run this manually to pre-compute H_{-D} for every discriminant -D with D <= N
"""

import argparse
import sys
import time
from datetime import datetime

from config import get_cache_dir
from src.classpoly import ClassPolyCache


def update_cache(max_d: int, min_d: int = 3) -> int:
    """Fill QUATORDER_CACHE_DIR with H_{-D} for min_d <= D <= max_d."""
    cache_dir = get_cache_dir()
    if cache_dir is None:
        print("❌ QUATORDER_CACHE_DIR is not set; nothing to update")
        return 1

    cache = ClassPolyCache(cache_dir)
    already = set(cache.cached_discriminants())
    wanted = [D for D in range(min_d, max_d + 1) if D % 4 in (0, 3) and D not in already]
    print(f"🧮 {len(wanted)} class polynomials to compute ({len(already)} already cached)")

    start = time.perf_counter()
    largest = None
    for count, D in enumerate(wanted, 1):
        H = cache.get(D)
        if largest is None or H.degree > largest.degree:
            largest = H
        if count % 50 == 0:
            print(f"✓ {count}/{len(wanted)} done (D = {D})")

    checked = cache.spot_check()
    print(f"✅ Cache holds {len(cache.cached_discriminants())} polynomials")
    print(f"📁 Saved to: {cache_dir}")
    if largest is not None:
        print(f"📈 Largest degree: {largest.degree} (D = {largest.D})")
    if checked is not None:
        print(f"🔍 Spot check passed for D = {checked}")
    print(f"🕐 Finished {datetime.now().strftime('%B %d, %Y at %I:%M %p')} in {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Pre-compute Hilbert class polynomials")
    parser.add_argument("max_d", type=int, help="Largest D to compute")
    parser.add_argument("--min-d", type=int, default=3)
    args = parser.parse_args()
    try:
        sys.exit(update_cache(args.max_d, args.min_d))
    except Exception as e:
        print(f"❌ Error: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
