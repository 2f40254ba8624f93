#pragma once

#include "autorake/config.hpp"
#include "autorake/corpus.hpp"
#include "autorake/csv.hpp"
#include "autorake/error.hpp"
#include "autorake/optimize.hpp"
#include "autorake/rake.hpp"
#include "autorake/reports.hpp"
#include "autorake/stoplist.hpp"
#include "autorake/termstats.hpp"
#include "autorake/tokenizer.hpp"
#include "autorake/utf8.hpp"
