/** Schema constants mirrored from the server, in presentation order. */

export type TriState = "yes" | "no" | "undetermined";

export interface CircumstanceQuestion {
  field: string;
  prompt: string;
}

/** The 13 circumstance questions, in question order. */
export const CIRCUMSTANCE_QUESTIONS: CircumstanceQuestion[] = [
  { field: "knew_each_other", prompt: "The shooter and the victim knew each other." },
  { field: "domestic_violence", prompt: "The incident was a case of domestic violence." },
  { field: "during_other_crime", prompt: "The firearm was used during another crime." },
  { field: "self_defense", prompt: "The firearm was used in self defense." },
  { field: "alcohol_involved", prompt: "Alcohol was involved." },
  { field: "drugs_involved", prompt: "Drugs (other than alcohol) were involved." },
  { field: "self_directed", prompt: "The shooting was self-directed." },
  { field: "suicide_or_attempt", prompt: "The shooting was a suicide or suicide attempt." },
  { field: "unintentional", prompt: "The shooting was unintentional." },
  { field: "by_police", prompt: "The shooting was by a police officer." },
  { field: "at_police", prompt: "The shooting was directed at a police officer." },
  { field: "gun_stolen", prompt: "The firearm was stolen." },
  { field: "gun_owned_by_victim_family", prompt: "The firearm was owned by the victim/victim's family." },
];

export const TIME_PLACE_FIELDS = [
  "city", "state", "locale_detail", "date", "clock_time", "time_of_day",
] as const;
export const WEAPON_FIELDS = ["weapon_type", "shots_fired"] as const;
export const SHOOTER_ATTRS = ["name", "gender", "age", "race"] as const;
export const VICTIM_ATTRS = [...SHOOTER_ATTRS, "injured", "hospitalized", "killed"] as const;

export const TRI_STATES: TriState[] = ["yes", "no", "undetermined"];

/** Three-way control cycle: undetermined -> yes -> no -> undetermined. */
export function cycleTriState(current: TriState): TriState {
  switch (current) {
    case "undetermined":
      return "yes";
    case "yes":
      return "no";
    case "no":
      return "undetermined";
  }
}

export function isTriState(v: string): v is TriState {
  return v === "yes" || v === "no" || v === "undetermined";
}
