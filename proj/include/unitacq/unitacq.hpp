#pragma once

#include "unitacq/assignment.hpp"
#include "unitacq/caterpillar.hpp"
#include "unitacq/clique.hpp"
#include "unitacq/engine.hpp"
#include "unitacq/error.hpp"
#include "unitacq/generators.hpp"
#include "unitacq/graph.hpp"
#include "unitacq/solver.hpp"
#include "unitacq/synthesis.hpp"
