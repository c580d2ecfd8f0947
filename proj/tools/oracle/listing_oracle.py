#!/usr/bin/env python3
# Copyright 2026 The EVKG Toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference answers for the competency listings, computed with rdflib.

usage: listing_oracle.py SNAPSHOT.nt QUERY_DIR OUT_DIR

Every QUERY_DIR/listingNN.rq is evaluated over the snapshot and written to
OUT_DIR/listingNN.tsv in the layout produced by `evkg query --format tsv`.
"""
import decimal
import pathlib
import re
import sys

import rdflib
from rdflib import BNode, Literal, URIRef
from rdflib.namespace import XSD

PREFIXES = {
    "ev-ont": "https://w3id.org/evkg/ontology/",
    "evr": "https://w3id.org/evkg/resource/",
    "kwg-ont": "http://stko-kwg.geog.ucsb.edu/lod/ontology/",
    "geo": "http://www.opengis.net/ont/geosparql#",
    "sf": "http://www.opengis.net/ont/sf#",
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
}

# A brace group holding nothing but a FILTER constrains the enclosing group.
FILTER_ONLY_GROUP = re.compile(r"\{\s*(FILTER\s*\((?:[^()]|\([^()]*\))*\))\s*\}", re.IGNORECASE)
SELECT_ALL = re.compile(r"\bSELECT\s+(?:DISTINCT\s+)?\*", re.IGNORECASE)


def hoist_filters(text):
    return FILTER_ONLY_GROUP.sub(r"\1", text)


def escape(s):
    return (s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\r", "\\r"))


def canonical_decimal(value):
    # Decimals are compared through the nearest double, printed positionally
    # with the fewest digits that round-trip.
    text = format(decimal.Decimal(repr(float(value))), "f")
    if "." not in text:
        text += ".0"
    return text


def term(t):
    if t is None:
        return ""
    if isinstance(t, URIRef):
        return f"<{t}>"
    if isinstance(t, BNode):
        return f"_:{t}"
    assert isinstance(t, Literal)
    lexical = str(t)
    if t.datatype == XSD.decimal:
        lexical = canonical_decimal(t.toPython())
    out = f'"{escape(lexical)}"'
    if t.language:
        return out + "@" + t.language
    if t.datatype and t.datatype != XSD.string:
        return out + f"^^<{t.datatype}>"
    return out


def run(graph, text):
    result = graph.query(hoist_filters(text), initNs=PREFIXES)
    names = [str(v) for v in result.vars]
    if SELECT_ALL.search(text):
        # rdflib leaves the order of `SELECT *` columns unspecified.
        first = {}
        for m in re.finditer(r"[?$]([A-Za-z_][A-Za-z0-9_]*)", text):
            first.setdefault(m.group(1), m.start())
        names.sort(key=lambda n: first.get(n, len(text)))
    result_vars = [rdflib.Variable(n) for n in names]
    lines = sorted("\t".join(term(row[v]) for v in result_vars) for row in result)
    return "\n".join(["\t".join("?" + n for n in names)] + lines) + "\n"


def main(argv):
    snapshot, query_dir, out_dir = map(pathlib.Path, argv[1:4])
    graph = rdflib.Graph()
    graph.parse(snapshot, format="nt")
    out_dir.mkdir(parents=True, exist_ok=True)
    for rq in sorted(query_dir.glob("listing*.rq")):
        tsv = run(graph, rq.read_text())
        (out_dir / (rq.stem + ".tsv")).write_text(tsv)
        print(f"{rq.stem}: {tsv.count(chr(10)) - 1} rows")


if __name__ == "__main__":
    main(sys.argv)
