"""
SVG badges for filter verdict statuses
"""

# Pass: check mark
PASS_ICON = """
<svg xmlns="http://www.w3.org/2000/svg" width="18" height="18" viewBox="0 0 24 24" fill="none" stroke="#43A047" stroke-width="2" stroke-linecap="round" stroke-linejoin="round" class="feather feather-check-circle">
  <path d="M22 11.08V12a10 10 0 1 1-5.93-9.14"></path>
  <polyline points="22 4 12 14.01 9 11.01"></polyline>
</svg>
"""

# Reject: crossed circle
REJECT_ICON = """
<svg xmlns="http://www.w3.org/2000/svg" width="18" height="18" viewBox="0 0 24 24" fill="none" stroke="#E53935" stroke-width="2" stroke-linecap="round" stroke-linejoin="round" class="feather feather-x-circle">
  <circle cx="12" cy="12" r="10"></circle>
  <line x1="15" y1="9" x2="9" y2="15"></line>
  <line x1="9" y1="9" x2="15" y2="15"></line>
</svg>
"""

# Inapplicable: dash
INAPPLICABLE_ICON = """
<svg xmlns="http://www.w3.org/2000/svg" width="18" height="18" viewBox="0 0 24 24" fill="none" stroke="#78909C" stroke-width="2" stroke-linecap="round" stroke-linejoin="round" class="feather feather-minus-circle">
  <circle cx="12" cy="12" r="10"></circle>
  <line x1="8" y1="12" x2="16" y2="12"></line>
</svg>
"""

# Inconclusive: question mark
INCONCLUSIVE_ICON = """
<svg xmlns="http://www.w3.org/2000/svg" width="18" height="18" viewBox="0 0 24 24" fill="none" stroke="#FB8C00" stroke-width="2" stroke-linecap="round" stroke-linejoin="round" class="feather feather-help-circle">
  <circle cx="12" cy="12" r="10"></circle>
  <path d="M9.09 9a3 3 0 0 1 5.83 1c0 2-3 3-3 3"></path>
  <line x1="12" y1="17" x2="12.01" y2="17"></line>
</svg>
"""

STATUS_ICONS = {
    'pass': PASS_ICON,
    'reject': REJECT_ICON,
    'inapplicable': INAPPLICABLE_ICON,
    'inconclusive': INCONCLUSIVE_ICON,
}
