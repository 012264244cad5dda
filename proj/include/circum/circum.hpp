#pragma once

#include "circum/errors.hpp"
#include "circum/extremal.hpp"
#include "circum/graph.hpp"
#include "circum/io.hpp"
#include "circum/oracle.hpp"
#include "circum/serialize.hpp"
#include "circum/solvers.hpp"
#include "circum/spreading.hpp"
#include "circum/verification.hpp"
#include "circum/vertex_set.hpp"
#include "circum/walks.hpp"
#include "circum/harness/corpus.hpp"
#include "circum/harness/lemma_suite.hpp"
#include "circum/harness/report.hpp"
#include "circum/harness/runner.hpp"
