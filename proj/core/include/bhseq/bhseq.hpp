#pragma once

#include "bhseq/bh_set.hpp"
#include "bhseq/checked.hpp"
#include "bhseq/closed_forms.hpp"
#include "bhseq/errors.hpp"
#include "bhseq/greedy.hpp"
#include "bhseq/interval.hpp"
#include "bhseq/lemma1.hpp"
#include "bhseq/membership_set.hpp"
#include "bhseq/representations.hpp"
#include "bhseq/support_table.hpp"
#include "bhseq/witness.hpp"
