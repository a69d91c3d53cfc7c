# Copyright 2026 The swerkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import pathlib

import pytest

import swerkit

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_wer_and_alignment():
    assert swerkit.wer("what did you do in paris", "what did u do in phariz") == pytest.approx(1 / 3)
    a = swerkit.align("a a", "a")
    assert a["ops"] == [("match", 0, 0), ("del", 1, None)]
    assert swerkit.tokenize("My name is H. a.") == ["my", "name", "is", "h", "a"]
    wip, wil = swerkit.wip_wil("a b c", "a b d")
    assert wip == pytest.approx(4 / 9)
    assert wil == pytest.approx(5 / 9)


def test_cer_and_hwer():
    assert swerkit.cer("harvey", "agearvey") == pytest.approx(0.5)
    assert swerkit.cer("bob", "bop", 1) == 0.0
    assert swerkit.hwer([5, 3]) == pytest.approx(0.2)


def test_wer_vs_swer_examples_with_lexicon():
    lex = swerkit.Lexicon.load(str(DATA / "fixture.vec"))
    assert lex.similarity("you", "u") == pytest.approx(0.3, abs=1e-6)
    r1 = swerkit.swer("what did you do in paris", "what did u do in phariz", ne=[5], lexicon=lex)
    r2 = swerkit.swer("i love switzerland", "i love switjerlan", ne=[2], lexicon=lex)
    r3 = swerkit.swer("ram loves sita", "ram love sita", lexicon=lex)
    assert r1["swer"] == pytest.approx(0.4667, abs=1e-4)
    assert r2["swer"] == pytest.approx(0.6667, abs=1e-4)
    assert r3["swer"] == 0.0
    assert [t["reason"] for t in r1["trace"]] == ["sim-below", "entity"]


def test_similarity_table_and_spelled_span():
    r = swerkit.swer("ram loves sita", "ram love sita", similarities={("loves", "love"): 0.85})
    assert r["swer"] == 0.0
    s = swerkit.swer(
        "My name is harvey spelled as h. a. r. v. e. y.",
        "My name is hurdy spelled as age a. r. v. e. y.",
        ne=[3],
        spelled=[(6, 12, "harvey")],
    )
    assert s["ref_len"] == 7
    assert s["swer"] == pytest.approx(29 / 84)


def test_errors_carry_codes():
    with pytest.raises(swerkit.SwerkitError, match="InvalidConfig"):
        swerkit.swer("a b", "a", iw=0.5)
    with pytest.raises(swerkit.SwerkitError, match="ConflictingAnnotation"):
        swerkit.swer("a b", "a", ne=[7])
    with pytest.raises(ValueError):
        swerkit.pearson([1, 1], [1, 2])


def test_conll_and_injection():
    sentences = swerkit.parse_conll((DATA / "eu_rejects.conll").read_text())
    assert sentences[0]["ne"] == [0, 2, 6]
    variants = swerkit.entity_variants("ram goes to paris", [3], seed=42)
    assert [v["variant_id"] for v in variants] == ["utt-sub3", "utt-del3"]
    assert variants[1]["text"] == "ram goes to"
    assert variants == swerkit.entity_variants("ram goes to paris", [3], seed=42)


def test_correlation():
    assert swerkit.pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8, abs=1e-12)
    assert swerkit.spearman([1, 2, 3], [1, 4, 9]) == pytest.approx(1.0)


def test_score_files():
    report = json.loads(
        swerkit.score_files(
            str(DATA / "trio.ref.trn"),
            str(DATA / "trio.hyp.trn"),
            str(DATA / "trio.ann.jsonl"),
            embeddings=str(DATA / "fixture.vec"),
            jobs=2,
        )
    )
    assert [u["swer"]["swer"] for u in report["utterances"]] == pytest.approx([0.466667, 0.666667, 0.0])
