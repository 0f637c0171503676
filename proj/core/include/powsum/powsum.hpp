#pragma once

#include "powsum/binomial.hpp"
#include "powsum/congruence.hpp"
#include "powsum/erdos_moser.hpp"
#include "powsum/errors.hpp"
#include "powsum/modular.hpp"
#include "powsum/natural.hpp"
#include "powsum/parallel.hpp"
#include "powsum/power_sum.hpp"
#include "powsum/report.hpp"
