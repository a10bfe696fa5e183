// Copyright 2026 The cswitch Authors
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

#include "cswitch/errors.hpp"
#include "cswitch/tolerances.hpp"
#include "cswitch/matrix_core.hpp"
#include "cswitch/random.hpp"
#include "cswitch/channel_kit.hpp"
#include "cswitch/cyclic_switch.hpp"
#include "cswitch/info_analysis.hpp"
#include "cswitch/protocol_sim.hpp"
#include "cswitch/io.hpp"
#include "cswitch/verify.hpp"
