#pragma once

#include "mirrorclone/choi.hpp"
#include "mirrorclone/circuit.hpp"
#include "mirrorclone/cloner_models.hpp"
#include "mirrorclone/fidelity_functional.hpp"
#include "mirrorclone/format.hpp"
#include "mirrorclone/optimality.hpp"
#include "mirrorclone/quantum_core.hpp"
