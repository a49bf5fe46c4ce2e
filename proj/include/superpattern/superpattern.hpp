#pragma once

#include "superpattern/classes.hpp"
#include "superpattern/layered.hpp"
#include "superpattern/permutation.hpp"
#include "superpattern/search.hpp"
#include "superpattern/sequence.hpp"
#include "superpattern/universal.hpp"
