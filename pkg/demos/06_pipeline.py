"""The randomized hunt for the padded clique P' inside a host."""

import json

from mextremal import blow_up
from mextremal.pipeline import PPrimeSpec, build_pprime, find_pprime

spec = PPrimeSpec(k=3, matching_colors=(1,), r=2)
target = build_pprime(spec)
host = blow_up(target, 3)
res = find_pprime(host, spec, rounds=10, seed=0)
print("found:", res.found, "at", res.embedding.mapping if res.found else None)
print(json.dumps(res.trace.as_dict(), indent=2))
