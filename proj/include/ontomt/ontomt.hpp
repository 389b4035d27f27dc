#pragma once

#include "ontomt/bundle.hpp"
#include "ontomt/corpus.hpp"
#include "ontomt/error.hpp"
#include "ontomt/evaluation.hpp"
#include "ontomt/lang_context.hpp"
#include "ontomt/language.hpp"
#include "ontomt/lexicon.hpp"
#include "ontomt/ontology.hpp"
#include "ontomt/parse_tree.hpp"
#include "ontomt/parsing.hpp"
#include "ontomt/pipeline.hpp"
#include "ontomt/reorder.hpp"
#include "ontomt/resource_io.hpp"
#include "ontomt/rules.hpp"
#include "ontomt/text.hpp"
#include "ontomt/trace_report.hpp"
#include "ontomt/transfer.hpp"
