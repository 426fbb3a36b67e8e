#pragma once

#include "feige/beta.hpp"
#include "feige/lemmas.hpp"
#include "feige/minimize.hpp"
#include "feige/montecarlo.hpp"
#include "feige/rational.hpp"
#include "feige/report.hpp"
#include "feige/tail.hpp"
#include "feige/verify.hpp"
