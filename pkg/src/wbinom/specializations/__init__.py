"""Images of the formal binomials under concrete weight choices."""
