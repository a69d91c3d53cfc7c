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

"""WER, CER, WIP/WIL and Semantic-WER scoring for ASR output."""

from ._core import (
    Lexicon,
    SwerkitError,
    align,
    align_words,
    cer,
    cosine,
    entity_variants,
    hwer,
    parse_conll,
    pearson,
    score_files,
    spearman,
    swer,
    tokenize,
    wer,
    wip_wil,
)

__version__ = "0.1.0"

__all__ = [
    "Lexicon",
    "SwerkitError",
    "align",
    "align_words",
    "cer",
    "cosine",
    "entity_variants",
    "hwer",
    "parse_conll",
    "pearson",
    "score_files",
    "spearman",
    "swer",
    "tokenize",
    "wer",
    "wip_wil",
]
