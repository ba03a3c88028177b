namespace sforge {}
