#pragma once

namespace o4tensor {

// Frozen generator-table report: the byte-exact JSON the command line tool
// prints for `check-o4 --variant both --format json`, covering both T
// variants.  The tool recomputes the report on every run and compares
// against this; tests/golden/check_o4.json holds the same bytes for
// external comparison.  Regenerate only after inspecting a fresh run.
inline const char* golden_check_o4_json() {
    return R"o4golden({
  "variants": [
    {
      "variant": "as-printed",
      "relations": [
        {
          "id": "[J0,J+1] = +J+1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,J-1] = -J-1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,J-1] = -J0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[T0,T+1] = +J+1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[T0,T-1] = -J-1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[T+1,T-1] = -J0",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "1",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J0,T+1] = +T+1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J0,T0] = 0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,T-1] = -T-1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T+1] = 0",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T0] = -T+1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T-1] = -T0",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T0] = +T+1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T-1] = 0",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T+1] = 0",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T0] = -T+1",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J+1,T-1] = -T0",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T+1] = +T0",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T0] = +T-1",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T-1] = 0",
          "block": "shifted_index",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/2",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/2",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M+1,N+1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M+1,N0] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M+1,N-1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M0,N+1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M0,N0] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M0,N-1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M-1,N+1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M-1,N0] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 2,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 3,
              "col": 1,
              "value": {
                "re": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "-1/8",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 2,
              "value": {
                "re": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ],
                "im": [
                  {
                    "coef": "1/8",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[M-1,N-1] = 0",
          "block": "decoupling",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 3,
              "col": 4,
              "value": {
                "re": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 3,
              "value": {
                "re": [
                  {
                    "coef": "-1/4",
                    "radicand": 1
                  }
                ],
                "im": [
                  {
                    "coef": "1/4",
                    "radicand": 1
                  }
                ]
              }
            }
          ]
        }
      ]
    },
    {
      "variant": "imaginary-t",
      "relations": [
        {
          "id": "[J0,J+1] = +J+1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,J-1] = -J-1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,J-1] = -J0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[T0,T+1] = +J+1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[T0,T-1] = -J-1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[T+1,T-1] = -J0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,T+1] = +T+1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,T0] = 0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J0,T-1] = -T-1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T+1] = 0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T0] = -T+1",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T-1] = -T0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J-1,T0] = +T+1",
          "block": "tabulated",
          "passes": false,
          "residual_nonzero_entries": [
            {
              "row": 1,
              "col": 4,
              "value": {
                "re": [],
                "im": [
                  {
                    "coef": "1",
                    "radicand": 2
                  }
                ]
              }
            },
            {
              "row": 4,
              "col": 1,
              "value": {
                "re": [],
                "im": [
                  {
                    "coef": "-1",
                    "radicand": 2
                  }
                ]
              }
            }
          ]
        },
        {
          "id": "[J-1,T-1] = 0",
          "block": "tabulated",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T+1] = 0",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T0] = -T+1",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J+1,T-1] = -T0",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J-1,T+1] = +T0",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J-1,T0] = +T-1",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[J-1,T-1] = 0",
          "block": "shifted_index",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M+1,N+1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M+1,N0] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M+1,N-1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M0,N+1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M0,N0] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M0,N-1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M-1,N+1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M-1,N0] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        },
        {
          "id": "[M-1,N-1] = 0",
          "block": "decoupling",
          "passes": true,
          "residual_nonzero_entries": []
        }
      ]
    }
  ]
}
)o4golden";
}

}  // namespace o4tensor
