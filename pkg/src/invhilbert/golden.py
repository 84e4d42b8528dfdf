"""Reference Hilbert function of K[End(V (x) W)]^(GL(V) x GL(W)) for dim V = dim W = 2.

The 101 values for n = 0..100 ship inside the package.  The checksum is the
SHA-256 of the values joined by commas without whitespace, and is checked on
every load.
"""

from __future__ import annotations

import hashlib
from functools import lru_cache

from .errors import ConsistencyError

_GOLDEN_TEXT = """
1,1,4,6,16,23,52,77,150,224,396,583,964,1395,2180,3100,4639,6466,9344,12785,
17936,24121,33008,43674,58512,76277,100312,129009,166932,212022,270448,339605,
427677,531462,661652,814348,1003396,1224088,1494124,1807954,2187942,2627594,
3154972,3762544,4485172,5314292,6292836,7411150,8721791,10213967,11951528,
13922650,16204356,18783815,21753488,25099607,28932476,33237650,38145976,
43642527,49881864,56848831,64725080,73495746,83373309,94343640,106654388,
120292717,135546036,152403681,171197884,191920988,214955830,240298735,
268389268,299229137,333321320,370674266,411861940,456901107,506444699,
560519876,619867224,684526384,755335320,832348504,916511528,1007896684,
1107568268,1215619404,1333245416,1460563640,1598913368,1748440272,1910641560,
2085695460,2275272477,2479588053,2700502140,2938272966,3194967240
"""

GOLDEN_SHA256 = "8cbfa587cf7ea28f4c2f1ad6066191c0974e823bb91f6600559748821c278866"


@lru_cache(maxsize=None)
def golden_data() -> tuple[int, ...]:
    """The reference values, index n holding the dimension in degree n."""
    joined = "".join(_GOLDEN_TEXT.split())
    digest = hashlib.sha256(joined.encode("ascii")).hexdigest()
    if digest != GOLDEN_SHA256:
        raise ConsistencyError(f"embedded reference data is corrupt (sha256 {digest})")
    return tuple(int(v) for v in joined.split(","))
