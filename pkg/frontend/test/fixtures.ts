// Recorded from a live apidialog server over the bundled demo corpus;
// the walkthrough is: ask, pick "return path", pick "absolute".
export const FLOW = {
  "create": {
    "session": {
      "id": "gwl1pBbNHCDbnX8Q-g5-eQ",
      "state": "active",
      "strategy": "id3",
      "query": "get the current working directory",
      "rounds": 0,
      "created_at": "2026-08-22T15:36:52+00:00"
    },
    "transcript": [],
    "question": {
      "text": "What do you want to do?",
      "aspect": "action#Has Event",
      "options": [
        {
          "id": "0",
          "label": "convert path string to path",
          "api_count": 2
        },
        {
          "id": "1",
          "label": "return path",
          "api_count": 2
        },
        {
          "id": "2",
          "label": "return system property",
          "api_count": 1
        }
      ]
    }
  },
  "answer1": {
    "session": {
      "id": "gwl1pBbNHCDbnX8Q-g5-eQ",
      "state": "active",
      "strategy": "id3",
      "query": "get the current working directory",
      "rounds": 1,
      "created_at": "2026-08-22T15:36:52+00:00"
    },
    "transcript": [
      {
        "question": "What do you want to do?",
        "aspect": "action#Has Event",
        "options": [
          {
            "id": "0",
            "label": "convert path string to path",
            "api_count": 2
          },
          {
            "id": "1",
            "label": "return path",
            "api_count": 2
          },
          {
            "id": "2",
            "label": "return system property",
            "api_count": 1
          }
        ],
        "selected_option_id": "1",
        "selected_label": "return path"
      }
    ],
    "question": {
      "text": "What kind of the path string do you want?",
      "aspect": "path string#Has Status",
      "options": [
        {
          "id": "0",
          "label": "absolute",
          "api_count": 1
        },
        {
          "id": "1",
          "label": "canonical",
          "api_count": 1
        }
      ]
    }
  },
  "answer2": {
    "session": {
      "id": "gwl1pBbNHCDbnX8Q-g5-eQ",
      "state": "finished",
      "strategy": "id3",
      "query": "get the current working directory",
      "rounds": 2,
      "created_at": "2026-08-22T15:36:52+00:00"
    },
    "transcript": [
      {
        "question": "What do you want to do?",
        "aspect": "action#Has Event",
        "options": [
          {
            "id": "0",
            "label": "convert path string to path",
            "api_count": 2
          },
          {
            "id": "1",
            "label": "return path",
            "api_count": 2
          },
          {
            "id": "2",
            "label": "return system property",
            "api_count": 1
          }
        ],
        "selected_option_id": "1",
        "selected_label": "return path"
      },
      {
        "question": "What kind of the path string do you want?",
        "aspect": "path string#Has Status",
        "options": [
          {
            "id": "0",
            "label": "absolute",
            "api_count": 1
          },
          {
            "id": "1",
            "label": "canonical",
            "api_count": 1
          }
        ],
        "selected_option_id": "0",
        "selected_label": "absolute"
      }
    ],
    "recommendation": {
      "query": "get the current working directory",
      "rounds": 2,
      "results": [
        {
          "fqn": "java.io.File.getAbsolutePath()",
          "description": "Returns the path, the absolute path string of the current working directory.",
          "keywords": [
            {
              "text": "returns",
              "source": "DecisionPath"
            },
            {
              "text": "path string",
              "source": "DecisionPath"
            },
            {
              "text": "absolute",
              "source": "DecisionPath"
            }
          ]
        }
      ],
      "extensions": [
        {
          "fqn": "java.io.File.getCanonicalPath()",
          "relation": "Function Similarity",
          "description": "Returns the path, the canonical path string of the current working directory.",
          "keywords": [
            {
              "text": "returns",
              "source": "DecisionPath"
            },
            {
              "text": "path string",
              "source": "DecisionPath"
            },
            {
              "text": "absolute",
              "source": "DecisionPath"
            },
            {
              "text": "Function Similarity",
              "source": "RelationLabel"
            }
          ]
        },
        {
          "fqn": "java.nio.file.Path.toAbsolutePath()",
          "relation": "Function Similarity",
          "description": "Returns the path, the absolute path object of this path.",
          "keywords": [
            {
              "text": "returns",
              "source": "DecisionPath"
            },
            {
              "text": "path string",
              "source": "DecisionPath"
            },
            {
              "text": "absolute",
              "source": "DecisionPath"
            },
            {
              "text": "Function Similarity",
              "source": "RelationLabel"
            }
          ]
        },
        {
          "fqn": "java.nio.file.FileSystem.getPath(java.lang.String, java.lang.String)",
          "relation": "Function Collaboration",
          "description": "Converts a path string to a path.",
          "keywords": [
            {
              "text": "returns",
              "source": "DecisionPath"
            },
            {
              "text": "path string",
              "source": "DecisionPath"
            },
            {
              "text": "absolute",
              "source": "DecisionPath"
            },
            {
              "text": "Function Collaboration",
              "source": "RelationLabel"
            }
          ]
        },
        {
          "fqn": "java.nio.file.Paths.get(java.lang.String, java.lang.String)",
          "relation": "Function Collaboration",
          "description": "Converts a path string, or a sequence of strings that when joined form a path string, to a path.",
          "keywords": [
            {
              "text": "returns",
              "source": "DecisionPath"
            },
            {
              "text": "path string",
              "source": "DecisionPath"
            },
            {
              "text": "absolute",
              "source": "DecisionPath"
            },
            {
              "text": "Function Collaboration",
              "source": "RelationLabel"
            }
          ]
        }
      ]
    }
  },
  "nocand": {
    "status": 404,
    "body": {
      "code": "no_candidates",
      "message": "nothing in the graph matches 'weld the flux capacitor'"
    }
  },
  "stopped": {
    "session": {
      "id": "yPVMj8OC0s6gcgWIi41Qmg",
      "state": "finished",
      "strategy": "id3",
      "query": "get the current working directory",
      "rounds": 0,
      "created_at": "2026-08-22T15:36:52+00:00"
    },
    "transcript": [],
    "recommendation": {
      "query": "get the current working directory",
      "rounds": 0,
      "results": [
        {
          "fqn": "java.io.File.getAbsolutePath()",
          "description": "Returns the path, the absolute path string of the current working directory.",
          "keywords": []
        },
        {
          "fqn": "java.io.File.getCanonicalPath()",
          "description": "Returns the path, the canonical path string of the current working directory.",
          "keywords": []
        },
        {
          "fqn": "java.lang.System.getProperty(java.lang.String)",
          "description": "Returns the system property, the absolute path string of the current working directory.",
          "keywords": []
        },
        {
          "fqn": "java.nio.file.FileSystem.getPath(java.lang.String, java.lang.String)",
          "description": "Converts a path string to a path.",
          "keywords": []
        },
        {
          "fqn": "java.nio.file.Paths.get(java.lang.String, java.lang.String)",
          "description": "Converts a path string, or a sequence of strings that when joined form a path string, to a path.",
          "keywords": []
        }
      ],
      "extensions": [
        {
          "fqn": "java.nio.file.Path.toAbsolutePath()",
          "relation": "Function Similarity",
          "description": "Returns the path, the absolute path object of this path.",
          "keywords": [
            {
              "text": "Function Similarity",
              "source": "RelationLabel"
            }
          ]
        }
      ]
    }
  }
} as const;
