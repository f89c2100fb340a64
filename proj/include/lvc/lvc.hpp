#pragma once

#include "lvc/advice.hpp"
#include "lvc/auc.hpp"
#include "lvc/cn_select.hpp"
#include "lvc/cotree.hpp"
#include "lvc/embeddings.hpp"
#include "lvc/interval_encode.hpp"
#include "lvc/ivt.hpp"
#include "lvc/ldl.hpp"
#include "lvc/machine.hpp"
#include "lvc/majority.hpp"
#include "lvc/nash.hpp"
#include "lvc/neg_closed.hpp"
#include "lvc/numeric.hpp"
#include "lvc/pairing.hpp"
#include "lvc/pwl.hpp"
#include "lvc/rdiv.hpp"
#include "lvc/sierpinski.hpp"
#include "lvc/signed_digit.hpp"
#include "lvc/stream.hpp"
#include "lvc/svc.hpp"
#include "lvc/wwkl.hpp"
