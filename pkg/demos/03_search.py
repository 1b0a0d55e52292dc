"""
Searching for root-group elements
=================================

Instead of writing a certificate by hand, search short words in the
conjugated generators a = P^-1 A P, b = P^-1 B P for unipotent elements,
conjugate and combine them until they land in single root groups.
"""

import time

from hgarith import ParameterPair, SearchConfig, presentation_from_parameters, search_root_unipotents
from hgarith import serialize_certificate, verify_certificate
from hgarith.certificate import bundled_path, load_matrix

pair = ParameterPair.parse("0,0,1/3,2/3", "1/2,1/2,1/4,3/4")
pres = presentation_from_parameters(pair)
P = load_matrix(bundled_path("theorem1.P.json"))

# Small bounds keep this demo fast; the defaults (length 12) take ~20 s
cfg = SearchConfig(max_word_length=8, conjugator_length=7)
started = time.perf_counter()
result = search_root_unipotents(pres, P, cfg, parameters=pair, progress=print)
print(f"{time.perf_counter() - started:.1f} s")

# The shortest unipotent words found along the way
print(result.candidates[:10])

# One witness per root, smallest program first
for root in result.targets:
    w = result.best(root)
    print(root, w.name, len(w.slp), "definitions")
    print(w.matrix)

# Package the witnesses as a certificate and check it independently
cert = result.certificate()
print(serialize_certificate(cert))
print(verify_certificate(cert).headline())
