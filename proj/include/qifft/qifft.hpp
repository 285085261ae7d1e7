#pragma once

#include "qifft/error.hpp"
#include "qifft/ket.hpp"
#include "qifft/fft.hpp"
#include "qifft/oracle.hpp"
#include "qifft/signal_io.hpp"
#include "qifft/dot.hpp"
