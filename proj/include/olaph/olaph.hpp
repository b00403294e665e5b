// Copyright 2026 The olaph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "olaph/corpus_stats.hpp"
#include "olaph/error.hpp"
#include "olaph/ipa.hpp"
#include "olaph/lexicon.hpp"
#include "olaph/nlp.hpp"
#include "olaph/normalizer.hpp"
#include "olaph/pipeline.hpp"
#include "olaph/splitter.hpp"
#include "olaph/text.hpp"
#include "olaph/token.hpp"
#include "olaph/tools.hpp"
