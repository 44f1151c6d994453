#pragma once

// Umbrella header.

#include "qsym/annulus.hpp"
#include "qsym/braiding.hpp"
#include "qsym/errors.hpp"
#include "qsym/io.hpp"
#include "qsym/laurent.hpp"
#include "qsym/quantum.hpp"
#include "qsym/random.hpp"
#include "qsym/symmetric.hpp"
#include "qsym/transition.hpp"
#include "qsym/verify.hpp"
