public class SubListAdapter extends ArrayAdapter<String> {

    private static class ViewHolderItem {
        private TextView t;
    }

    @Override
    public View getView(final int position, View convertView, ViewGroup parent) {
        ViewHolderItem viewHolderItem;
        if (convertView == null) {
            convertView = LayoutInflater.from(getContext()).inflate(
                R.layout.subforsublist, parent, false
            );
            viewHolderItem = new ViewHolderItem();
            viewHolderItem.t = ((TextView) convertView.findViewById(R.id.name));
            convertView.setTag(viewHolderItem);
        } else {
            viewHolderItem = (ViewHolderItem) convertView.getTag();
        }
        final TextView t = viewHolderItem.t;
        return convertView;
    }
}
