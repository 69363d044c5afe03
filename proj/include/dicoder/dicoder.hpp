#pragma once

#include "dicoder/annotator.hpp"
#include "dicoder/coder.hpp"
#include "dicoder/corpus.hpp"
#include "dicoder/csv.hpp"
#include "dicoder/error.hpp"
#include "dicoder/eval.hpp"
#include "dicoder/levenshtein.hpp"
#include "dicoder/matcher.hpp"
#include "dicoder/normalize.hpp"
#include "dicoder/trie.hpp"
