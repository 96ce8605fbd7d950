/** The bundled worked example: choosing among three high schools against
 * six criteria (the classic textbook case, four of whose matrices are
 * inconsistent). Handy for trying the tool without typing 33 judgements. */

import type { ProblemDocument } from "./api.js";

export function schoolExample(): ProblemDocument {
  return {
    alternatives: ["School A", "School B", "School C"],
    criteria: [
      "learning",
      "friends",
      "school_life",
      "vocational_training",
      "college_preparation",
      "music_classes",
    ],
    matrices: {
      learning: [
        [1, "1/3", "1/2"],
        [3, 1, 3],
        [2, "1/3", 1],
      ],
      friends: [
        [1, 1, 1],
        [1, 1, 1],
        [1, 1, 1],
      ],
      school_life: [
        [1, 5, 1],
        ["1/5", 1, "1/5"],
        [1, 5, 1],
      ],
      vocational_training: [
        [1, 9, 7],
        ["1/9", 1, "1/5"],
        ["1/7", 5, 1],
      ],
      college_preparation: [
        [1, "1/2", 1],
        [2, 1, 2],
        [1, "1/2", 1],
      ],
      music_classes: [
        [1, 6, 4],
        ["1/6", 1, "1/3"],
        ["1/4", 3, 1],
      ],
    },
    weights: [
      [1, 4, 3, 1, 3, 4],
      ["1/4", 1, 7, 3, "1/5", 1],
      ["1/3", "1/7", 1, "1/5", "1/5", "1/6"],
      [1, "1/3", 5, 1, 1, "1/3"],
      ["1/3", 5, 5, 1, 1, 3],
      ["1/4", 1, 6, 3, "1/3", 1],
    ],
  };
}
