// Copyright 2026 The AGT Authors.
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

// Umbrella header for the academic genealogy toolkit.

#ifndef AGT_AGT_HPP
#define AGT_AGT_HPP

#include "agt/analytics.hpp"
#include "agt/builder.hpp"
#include "agt/corpus.hpp"
#include "agt/error.hpp"
#include "agt/export.hpp"
#include "agt/graph.hpp"
#include "agt/identity.hpp"
#include "agt/persistence.hpp"
#include "agt/service.hpp"
#include "agt/synthetic.hpp"
#include "agt/text.hpp"
#include "agt/types.hpp"

#endif  // AGT_AGT_HPP
