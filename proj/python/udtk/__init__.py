# Copyright 2026 The UDTK Authors. All Rights Reserved.
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

"""Tree kernels over Universal Dependencies."""

from ._udtk import (
    DepTree,
    Error,
    LabeledTree,
    Token,
    brute_force_kernel,
    dependents,
    evaluate,
    gram,
    parse_conllu,
    parse_constituency,
    parse_tree,
    run_eval,
    shortest_path,
    softmax2,
    subtree_tokens,
    synth,
    to_lct,
    train,
    train_binary,
    tree_kernel,
    validate,
    write_conllu,
)

__version__ = "0.1.0"
